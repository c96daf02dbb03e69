#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "specsing/errors.hpp"

namespace specsing {

using cplx = std::complex<double>;

enum class Singularity { none, endpoint_algebraic };

// Nodes on [lo, hi] with the distances to both endpoints stored separately,
// so integrands with |x - endpoint|^a factors can be evaluated without
// cancellation next to the endpoint.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> dist_lo;
    std::vector<double> dist_hi;
    double lo = 0.0;
    double hi = 0.0;
    Singularity singularity_mode = Singularity::endpoint_algebraic;

    std::size_t size() const { return nodes.size(); }
};

// Double-exponential rule with step 2^-level on t in [-tmax, tmax].
QuadratureRule tanh_sinh_rule(double lo, double hi, int level, double tmax = 4.5);

// tmax for which the dropped tails of an integrand behaving like
// dist^exponent near an endpoint stay below ~1e-16 (exponent > -1).
double tanh_sinh_tmax(double endpoint_exponent);

template <class F>
cplx integrate(const QuadratureRule& rule, F&& f) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
        s += rule.weights[i] * f(rule.nodes[i], rule.dist_lo[i], rule.dist_hi[i]);
    return s;
}

// Adaptive tanh-sinh on [a, b]; f(x, dist_lo, dist_hi).
cplx integrate_adaptive(const std::function<cplx(double, double, double)>& f, double a,
                        double b, double tol = 1e-12);

}  // namespace specsing
