#include "specsing/routh_romanovski.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "specsing/errors.hpp"

namespace specsing {

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};
}  // namespace

void EnsembleParams::validate() const {
    const bool classical = beta == 1 || beta == 2 || beta == 4;
    const bool even = beta > 0 && beta % 2 == 0;
    if (!classical && !even) throw ValidationError("beta must be 1, 2, 4 or a positive even integer");
    if (N < 1) throw ValidationError("N must be >= 1");
    if (!(p >= 0.0) || !std::isfinite(p)) throw ValidationError("p must be >= 0");
    if (!std::isfinite(q)) throw ValidationError("q must be finite");
}

cplx EnsembleParams::c_beta() const {
    return {-beta * (N + p - 1.0) / 2.0 - 1.0, q};
}

CauchyWeightParams CauchyWeightParams::for_kernel(const EnsembleParams& e) {
    switch (e.beta) {
        case 1: return {cplx(-e.N - e.p, 2.0 * e.q)};
        case 2: return {cplx(-e.N - e.p, e.q)};
        case 4: return {cplx(-2.0 * e.N - 2.0 * e.p, e.q)};
        default: throw ValidationError("kernel weights exist for beta in {1,2,4} only");
    }
}

double cayley_to_circle(double x) { return kPi + 2.0 * std::atan(x); }

double circle_to_cayley(double theta) {
    if (!(theta > 0.0 && theta < 2.0 * kPi))
        throw PoleError("circle_to_cayley: theta must lie in (0, 2 pi)");
    return -1.0 / std::tan(theta / 2.0);
}

PointMap scaled_point_map(double X, double scale) {
    const double u = X / scale;
    if (!(u > 0.0 && u < kPi)) throw PoleError("scaled_point_map: X/N must lie in (0, pi)");
    const double s = std::sin(u);
    return {-std::cos(u) / s, 1.0 / (scale * s * s)};
}

double weight_cauchy(double x, const CauchyWeightParams& w) {
    return std::exp(w.c.real() * std::log1p(x * x) + 2.0 * w.c.imag() * std::atan(x));
}

double weight_tilde1(double x, const CauchyWeightParams& w) {
    return std::exp(0.5 * (w.c.real() - 1.0) * std::log1p(x * x) + w.c.imag() * std::atan(x));
}

double weight_tilde4(double x, const CauchyWeightParams& w) {
    return std::exp((w.c.real() + 1.0) * std::log1p(x * x) + 2.0 * w.c.imag() * std::atan(x));
}

double weight_circle_scaled(double X, int N, const CauchyWeightParams& w) {
    const double u = X / N;
    if (!(u > 0.0 && u < kPi)) throw PoleError("weight_circle_scaled: X/N must lie in (0, pi)");
    return std::exp(-w.c.real() * std::log(std::sin(u)) + w.c.imag() * (u - kPi / 2.0));
}

double weight_circle_scaled(double X, const EnsembleParams& e) {
    return weight_circle_scaled(X, e.N, CauchyWeightParams::for_kernel(e));
}

cplx rr_poly(int n, cplx c, double x) {
    if (n < 0) throw ValidationError("rr_poly: negative degree");
    const cplx s = c + std::conj(c);
    // (-2i)^n (c+1)_n / (c + cbar + n + 1)_n, products to stay clear of gamma poles
    const cplx den = pochhammer(s + double(n) + 1.0, n);
    if (den == 0.0) throw PoleError("rr_poly: vanishing normalisation");
    const cplx pref = std::pow(-2.0 * kI, n) * pochhammer(c + 1.0, n) / den;
    return pref * hyp2f1_terminating(n, s + double(n) + 1.0, c + 1.0, (1.0 - kI * x) / 2.0);
}

namespace {

// (conj a)_n / (b)_n as a running product; stays finite for large n.
cplx pochhammer_ratio(cplx num, double den, int n) {
    cplx r = 1.0;
    for (int j = 0; j < n; ++j) r *= (num + double(j)) / (den + j);
    return r;
}

// Direct sum in w = 1 - e^{2iS/M} unless its terms cancel by more than
// kMaxCancel, then the 1 - w form 2F1(-n, a; 1 - n - conj(a); e^{2iS/M}).
constexpr double kMaxCancel = 1e3;

bool use_direct(int n, cplx a, double b, cplx w, cplx* value) {
    double mass = 0.0;
    *value = hyp2f1_terminating(n, a, cplx(b, 0.0), w, SeriesControl::for_degree(n), &mass);
    return mass <= kMaxCancel * std::abs(*value);
}

}  // namespace

namespace {
// p + k = 0 (only with qc = 0): the limit of (p)_j/(2p)_j is 1/2 for j >= 1,
// so 2F1 -> (1 + (1 - w)^n)/2 with 1 - w = e^{2iS/M}.
bool degenerate_block(int k, double p, double qc) {
    if (p + k > 0.0) return false;
    if (qc != 0.0) throw PoleError("p + k = 0 requires q = 0");
    return true;
}
}  // namespace

cplx rr_hyper_scaled(int M, int k, double p, double qc, double S) {
    const int n = M - k;
    if (degenerate_block(k, p, qc)) return 0.5 * (1.0 + std::exp(2.0 * kI * S * double(n) / double(M)));
    const cplx a(p + k, -qc);
    const double b = 2.0 * (p + k);
    const cplx e = std::exp(2.0 * kI * S / double(M));
    cplx direct;
    if (use_direct(n, a, b, 1.0 - e, &direct)) return direct;
    const cplx c2 = 1.0 - double(n) - std::conj(a);
    return pochhammer_ratio(std::conj(a), b, n) * hyp2f1_terminating(n, a, c2, e);
}

cplx rr_hyper_scaled_deriv(int M, int k, double p, double qc, double S) {
    const int n = M - k;
    if (n == 0) return 0.0;
    if (degenerate_block(k, p, qc))
        return kI * double(n) / double(M) * std::exp(2.0 * kI * S * double(n) / double(M));
    const cplx a(p + k, -qc);
    const double b = 2.0 * (p + k);
    const cplx e = std::exp(2.0 * kI * S / double(M));
    cplx direct;
    if (use_direct(n, a, b, 1.0 - e, &direct)) {
        const cplx inner = hyp2f1_terminating(n - 1, a + 1.0, cplx(b + 1.0, 0.0), 1.0 - e);
        return (-double(n) * a / b) * inner * (-2.0 * kI / double(M)) * e;
    }
    const cplx c2 = 1.0 - double(n) - std::conj(a);
    const cplx inner = hyp2f1_terminating(n - 1, a + 1.0, c2 + 1.0, e);
    return pochhammer_ratio(std::conj(a), b, n) * (-double(n) * a / c2) * inner * (2.0 * kI / double(M)) * e;
}

cplx rr_scaled(int n_minus_k, int k, double X, const EnsembleParams& e) {
    if (n_minus_k + k != e.N) throw ValidationError("rr_scaled: n_minus_k + k must equal N");
    if (!(e.p + k >= 0.0)) throw ValidationError("rr_scaled: p + k must be >= 0");
    const double u = X / e.N;
    if (!(u > 0.0 && u < kPi)) throw PoleError("rr_scaled: X/N must lie in (0, pi)");
    return rr_hyper_scaled(e.N, k, e.p, e.q, X);
}

namespace {
cplx weighted_prefactor(int M, int k, double p, double qc, double S) {
    const double u = S / M;
    const double sign = ((M - k) % 2 == 0) ? 1.0 : -1.0;
    const double mag = std::exp((p + k) * std::log(std::sin(u)) + qc * (u - kPi / 2.0));
    return sign * mag * std::exp(-kI * S * (1.0 - double(k) / M));
}
}  // namespace

cplx rr_weighted_scaled(int M, int k, double p, double qc, double S) {
    const double u = S / M;
    if (!(u > 0.0 && u < kPi)) throw PoleError("rr_weighted_scaled: S/M must lie in (0, pi)");
    return weighted_prefactor(M, k, p, qc, S) * rr_hyper_scaled(M, k, p, qc, S);
}

cplx rr_weighted_scaled_deriv(int M, int k, double p, double qc, double S) {
    const double u = S / M;
    if (!(u > 0.0 && u < kPi)) throw PoleError("rr_weighted_scaled: S/M must lie in (0, pi)");
    const cplx A = weighted_prefactor(M, k, p, qc, S);
    const cplx logd = (p + k) / (std::tan(u) * M) + qc / M - kI * (1.0 - double(k) / M);
    return A * (logd * rr_hyper_scaled(M, k, p, qc, S) + rr_hyper_scaled_deriv(M, k, p, qc, S));
}

double rr_norm(int n, cplx c) {
    if (n < 0) throw ValidationError("rr_norm: negative degree");
    const double s = 2.0 * c.real();
    const cplx lg = log_gamma(cplx(n + 1.0)) + log_gamma(cplx(-s - 2.0 * n)) +
                    log_gamma(cplx(-s - 2.0 * n - 1.0)) - log_gamma(cplx(-s - n)) -
                    log_gamma(-c - double(n)) - log_gamma(-std::conj(c) - double(n));
    const cplx h = std::exp((2.0 * n + 2.0 + s) * std::log(2.0) + std::log(kPi) + lg);
    if (!(h.real() > 0.0)) throw PoleError("rr_norm: non-positive norm at n = " + std::to_string(n));
    return h.real();
}

double orthogonality_check(int n, int m, const EnsembleParams& e, const QuadratureRule& rule) {
    if (n > e.N - 1 || m > e.N - 1 || n < 0 || m < 0)
        throw ValidationError("orthogonality_check: degrees must lie in [0, N-1]");
    const CauchyWeightParams w = CauchyWeightParams::for_kernel(e);
    // x = -cot(u), u in (0, pi): dx = du / sin^2 u
    const cplx val = integrate(rule, [&](double u, double, double) -> cplx {
        const double s = std::sin(u);
        const double x = -std::cos(u) / s;
        const double wt = std::exp(-2.0 * w.c.real() * std::log(s) +
                                   2.0 * w.c.imag() * (u - kPi / 2.0)) / (s * s);
        return wt * rr_poly(n, w.c, x) * rr_poly(m, w.c, x);
    });
    const double h = rr_norm(n, w.c);
    return std::abs(val - (n == m ? h : 0.0)) / h;
}

double orthogonality_check(int n, int m, const EnsembleParams& e) {
    return orthogonality_check(n, m, e, tanh_sinh_rule(0.0, kPi, 7));
}

}  // namespace specsing
