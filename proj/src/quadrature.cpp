#include "specsing/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace specsing {

QuadratureRule tanh_sinh_rule(double lo, double hi, int level, double tmax) {
    if (!(hi > lo)) throw ValidationError("tanh_sinh_rule: empty interval");
    if (level < 0 || level > 12) throw ValidationError("tanh_sinh_rule: level out of range");
    constexpr double half_pi = std::numbers::pi / 2.0;
    const double h = std::ldexp(1.0, -level);
    const int K = int(std::ceil(tmax / h));
    const double half = 0.5 * (hi - lo);

    QuadratureRule r;
    r.lo = lo;
    r.hi = hi;
    r.singularity_mode = Singularity::endpoint_algebraic;
    r.nodes.reserve(2 * K + 1);
    for (int k = -K; k <= K; ++k) {
        const double t = k * h;
        const double u = half_pi * std::sinh(t);
        const double ch = std::cosh(u);
        const double w = h * half_pi * std::cosh(t) / (ch * ch) * half;
        if (w == 0.0) continue;
        // 1 -/+ tanh(u) without cancellation
        const double one_minus = 2.0 / (1.0 + std::exp(2.0 * u));
        const double one_plus = 2.0 / (1.0 + std::exp(-2.0 * u));
        const double dlo = half * one_plus;
        const double dhi = half * one_minus;
        if (dlo == 0.0 || dhi == 0.0) continue;
        r.nodes.push_back(u < 0 ? lo + dlo : hi - dhi);
        r.dist_lo.push_back(dlo);
        r.dist_hi.push_back(dhi);
        r.weights.push_back(w);
    }
    return r;
}

double tanh_sinh_tmax(double endpoint_exponent) {
    const double e = std::max(endpoint_exponent, -0.99);
    // dist ~ 2 exp(-2u), u = (pi/2) sinh t; keep dist^(1+e) < 1e-16
    const double L = 37.0 / (1.0 + e);
    const double u = std::min(0.5 * L + 1.0, 340.0);
    return std::max(3.0, std::asinh(u / (std::numbers::pi / 2.0)));
}

cplx integrate_adaptive(const std::function<cplx(double, double, double)>& f, double a,
                        double b, double tol) {
    if (b == a) return 0.0;
    if (b < a) return -integrate_adaptive(f, b, a, tol);
    // halve the step until two levels agree relative to the L1 mass
    cplx prev = integrate(tanh_sinh_rule(a, b, 2), f);
    for (int level = 3; level <= 12; ++level) {
        const QuadratureRule rule = tanh_sinh_rule(a, b, level);
        cplx cur = 0.0;
        double l1 = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const cplx v = rule.weights[i] * f(rule.nodes[i], rule.dist_lo[i], rule.dist_hi[i]);
            cur += v;
            l1 += std::abs(v);
        }
        if (!std::isfinite(cur.real()) || !std::isfinite(cur.imag()))
            throw ConvergenceError("integrate_adaptive: non-finite integrand");
        if (std::abs(cur - prev) <= tol * std::max(l1, 1e-300) && level >= 4) return cur;
        prev = cur;
    }
    throw ConvergenceError("integrate_adaptive: no agreement between levels 11 and 12");
}

}  // namespace specsing
