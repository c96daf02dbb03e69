#include "specsing/special_fns.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "specsing/errors.hpp"

namespace specsing {

SeriesControl SeriesControl::for_degree(int n) {
    SeriesControl c;
    c.max_terms = 10 * n + 200;
    return c;
}

void CompensatedSum::step(double& s, double& c, double v) {
    const double t = s + v;
    if (std::abs(s) >= std::abs(v))
        c += (s - t) + v;
    else
        c += (v - t) + s;
    s = t;
}

void CompensatedSum::add(cplx v) {
    if (!enabled_) {
        re_ += v.real();
        im_ += v.imag();
        return;
    }
    step(re_, cre_, v.real());
    step(im_, cim_, v.imag());
}

namespace {

// Relative error budget for hyp1f1 (series cancellation or asymptotic truncation).
constexpr double kMaxRelError = 1e-13;

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// B_{2k} / (2k (2k-1)) for k = 1..8
constexpr double kStirling[] = {
    1.0 / 12.0,         -1.0 / 360.0,         1.0 / 1260.0,   -1.0 / 1680.0,
    1.0 / 1188.0,       -691.0 / 360360.0,    1.0 / 156.0,    -3617.0 / 122400.0,
};

}  // namespace

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw PoleError("log_gamma: pole at z = " + std::to_string(z.real()));
    // Shift right with the recurrence, then Stirling. Summing principal
    // logs of z+k gives the principal branch of log Gamma.
    cplx shift = 0.0;
    while (z.real() < 15.0) {
        shift += std::log(z);
        z += 1.0;
    }
    const cplx iz = 1.0 / z;
    const cplx iz2 = iz * iz;
    cplx series = 0.0;
    cplx pw = iz;
    for (double b : kStirling) {
        series += b * pw;
        pw *= iz2;
    }
    const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return (z - 0.5) * std::log(z) - z + half_log_2pi + series - shift;
}

double log_gamma(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw PoleError("log_gamma: pole at x = " + std::to_string(x));
    return std::lgamma(x);
}

cplx pochhammer(cplx a, int n) {
    if (n < 0) throw ValidationError("pochhammer: negative length");
    const bool near_pole =
        a.real() <= 0.0 && std::abs(a - std::round(a.real())) < 1e-8;
    if (n <= 64 || near_pole) {
        cplx r = 1.0;
        for (int k = 0; k < n; ++k) r *= a + double(k);
        return r;
    }
    return std::exp(log_gamma(a + double(n)) - log_gamma(a));
}

cplx hyp2f1_terminating(int n, cplx b, cplx c, cplx z, const SeriesControl& ctrl,
                        double* term_mass) {
    if (n < 0) throw ValidationError("hyp2f1_terminating: n must be >= 0");
    CompensatedSum sum(ctrl.compensated);
    cplx term = 1.0;
    sum.add(term);
    double mass = 1.0;
    int quiet = 0;
    for (int k = 0; k < n; ++k) {
        if (k + 1 >= ctrl.max_terms)
            throw ConvergenceError("hyp2f1_terminating: max_terms exhausted");
        const cplx ck = c + double(k);
        if (ck == 0.0) throw PoleError("hyp2f1_terminating: (c)_k vanishes");
        term *= double(k - n) * (b + double(k)) / (ck * double(k + 1)) * z;
        sum.add(term);
        mass += std::abs(term);
        if (term == 0.0) break;
        if (std::abs(term) <= ctrl.rel_tol * std::abs(sum.value())) {
            const cplx next = double(k + 1 - n) * (b + double(k + 1)) /
                              ((c + double(k + 1)) * double(k + 2)) * z;
            if (++quiet >= 2 && std::abs(next) < 1.0) break;
        } else {
            quiet = 0;
        }
    }
    if (term_mass) *term_mass = mass;
    return sum.value();
}

cplx hyp2f1_terminating(int n, cplx b, cplx c, cplx z) {
    return hyp2f1_terminating(n, b, c, z, SeriesControl::for_degree(n));
}

namespace {

struct Estimate {
    cplx value;
    double rel_err;
};

// Series accumulated in the complex type C over reals R. On the imaginary
// axis the terms peak near e^{|z|} while the sum can be O(|z|^{-Re a}), so
// the error estimate is eps_R max|term| / |sum|.
template <class C, class R>
Estimate hyp1f1_series(cplx a, cplx c, cplx z, const SeriesControl& ctrl) {
    using std::abs;
    const C la(R(a.real()), R(a.imag())), lc(R(c.real()), R(c.imag())), lz(R(z.real()), R(z.imag()));
    R re = 1, im = 0, cre = 0, cim = 0;
    auto add = [&](R& s, R& comp, const R& v) {
        if (!ctrl.compensated) {
            s += v;
            return;
        }
        const R t = s + v;
        comp += abs(s) >= abs(v) ? R((s - t) + v) : R((v - t) + s);
        s = t;
    };
    auto total = [&]() { return C(re + cre, im + cim); };
    C term(R(1), R(0));
    const double zabs = std::abs(z);
    R peak = 1;
    int quiet = 0;
    for (int k = 0;; ++k) {
        if (k + 1 >= ctrl.max_terms)
            throw ConvergenceError("hyp1f1: max_terms exhausted before tolerance");
        const C ck = lc + C(R(k), R(0));
        if (ck.real() == 0 && ck.imag() == 0) throw PoleError("hyp1f1: (c)_k vanishes");
        term *= (la + C(R(k), R(0))) / (ck * C(R(k + 1), R(0))) * lz;
        add(re, cre, R(term.real()));
        add(im, cim, R(term.imag()));
        const R m = abs(term);
        if (m > peak) peak = m;
        if (m == 0) break;
        if (double(k) > zabs && m <= R(ctrl.rel_tol) * R(abs(total()))) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
    }
    const C v = total();
    const R err = peak * std::numeric_limits<R>::epsilon() / R(abs(v));
    return {{double(R(v.real())), double(R(v.imag()))}, double(err)};
}

// 1/Γ(x) as exp(-log Γ), zero at the poles
cplx rgamma_times(cplx x, cplx log_factor) {
    if (is_nonpositive_integer(x)) return 0.0;
    return std::exp(log_factor - log_gamma(x));
}

// Large-|z| expansion with both exponential branches, each summed up to its
// smallest term; the error estimate is that term.
Estimate hyp1f1_asymptotic(cplx a, cplx c, cplx z) {
    const cplx kI(0.0, 1.0);
    const double sgn = z.imag() >= 0.0 ? 1.0 : -1.0;
    const cplx logz = std::log(z);
    const cplx lgc = log_gamma(c);
    const cplx pref1 = rgamma_times(c - a, lgc + sgn * std::numbers::pi * kI * a - a * logz);
    const cplx pref2 = rgamma_times(a, lgc + z + (a - c) * logz);

    auto sum = [&](cplx p, cplx q, cplx w, double* last) {
        cplx t = 1.0, acc = 1.0;
        double prev = 1.0;
        *last = 0.0;
        for (int s = 0; s < 400; ++s) {
            const cplx next = t * (p + double(s)) * (q + double(s)) / (double(s + 1) * w);
            const double m = std::abs(next);
            if (m >= prev) {
                *last = prev;
                return acc;
            }
            t = next;
            acc += t;
            prev = m;
            if (m <= 1e-18 * std::abs(acc)) {
                *last = m;
                return acc;
            }
        }
        *last = prev;
        return acc;
    };
    double e1 = 0.0, e2 = 0.0;
    const cplx s1 = pref1 == 0.0 ? cplx(0.0) : sum(a, a - c + 1.0, -z, &e1);
    const cplx s2 = pref2 == 0.0 ? cplx(0.0) : sum(c - a, 1.0 - a, z, &e2);
    const cplx v = pref1 * s1 + pref2 * s2;
    const double err = (std::abs(pref1) * e1 + std::abs(pref2) * e2) / std::abs(v) +
                       8.0 * std::numeric_limits<double>::epsilon();
    return {v, err};
}

}  // namespace

cplx hyp1f1(cplx a, cplx c, cplx z, const SeriesControl& ctrl) {
    using boost::multiprecision::cpp_bin_float_quad;
    using boost::multiprecision::cpp_complex_quad;
    const Estimate ld = hyp1f1_series<std::complex<long double>, long double>(a, c, z, ctrl);
    if (ld.rel_err <= kMaxRelError) return ld.value;
    if (std::abs(z) > 8.0) {
        const Estimate asy = hyp1f1_asymptotic(a, c, z);
        if (asy.rel_err <= kMaxRelError) return asy.value;
    }
    const Estimate quad = hyp1f1_series<cpp_complex_quad, cpp_bin_float_quad>(a, c, z, ctrl);
    if (quad.rel_err <= kMaxRelError) return quad.value;
    throw ConvergenceError("hyp1f1: cancellation too severe for the series and the large-|z| expansion");
}

cplx hyp1f1(cplx a, cplx c, cplx z) {
    SeriesControl ctrl;
    ctrl.max_terms = 200 + int(10.0 * std::abs(z));
    return hyp1f1(a, c, z, ctrl);
}

cplx gamma_ratio_expansion(cplx z, cplx a, cplx b, int order) {
    const cplx d = a - b;
    const cplx s = a + b - 1.0;
    cplx corr = 1.0;
    if (order >= 1) corr += d * s / (2.0 * z);
    if (order >= 2) {
        const cplx binom = d * (d - 1.0) / 2.0;
        corr += binom * (3.0 * s * s - a + b - 1.0) / (12.0 * z * z);
    }
    return std::pow(z, d) * corr;
}

}  // namespace specsing
