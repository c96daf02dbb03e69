#include "specsing/finite_kernels.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "specsing/errors.hpp"
#include "specsing/limiting_kernels.hpp"

namespace specsing {

namespace {

constexpr double kPi = std::numbers::pi;

bool near_diagonal(double X, double Y) {
    return std::abs(X - Y) < kDiagonalSwitch * (1.0 + std::abs(X));
}

double effective_scale(const EnsembleParams& e, double scale) {
    const double s = scale > 0.0 ? scale : double(e.N);
    if (!(s > 0.0)) throw ValidationError("scale must be positive");
    return s;
}

void require_beta(const EnsembleParams& e, int beta, const char* who) {
    e.validate();
    if (e.beta != beta)
        throw ValidationError(std::string(who) + ": beta = " + std::to_string(beta) + " required");
}

// int_0^upper sqrt(w2) I_{M-k}(z(s)) / (M sin(s/M)) ds, i.e. int I_{M-k} w1 dt
// from -inf up to z(upper), with z = -cot(s/M).
cplx weighted_tail(int M, int k, double p, double qc, double upper, double tol) {
    if (upper <= 0.0) return 0.0;
    const double top = std::min(upper, M * kPi);
    auto f = [&](double s, double, double dhi) -> cplx {
        const double u = s / M;
        if (!(u > 0.0 && u < kPi)) return 0.0;
        double sn = std::sin(u);
        if (top == M * kPi && dhi / M < 1e-3) sn = std::sin(dhi / M);
        if (sn <= 0.0) return 0.0;
        return rr_weighted_scaled(M, k, p, qc, s) / (M * sn);
    };
    return integrate_adaptive(f, 0.0, top, tol);
}

}  // namespace

SkewConstants SkewConstants::build(const EnsembleParams& e) {
    e.validate();
    SkewConstants sc;
    const CauchyWeightParams w = CauchyWeightParams::for_kernel(e);
    const int degrees = (e.beta == 4) ? 2 * e.N : e.N;
    for (int j = 0; j < degrees; ++j)
        sc.gamma_j.push_back((-w.c.real() - 1.0 - j) / rr_norm(j, w.c));
    sc.eta1 = specsing::eta1(e.p, e.q);
    sc.eta2 = specsing::eta2(e.p, e.q);
    if (e.beta == 1) {
        for (int k = 0; k < e.N; ++k)
            sc.s_tilde.push_back(0.5 * tail_integral(k, e.N * kPi, e).real());
    }
    return sc;
}

double kernel_s2_general(int M, int k, double p, double qc, double X, double Y) {
    if (M - k < 1) throw ValidationError("kernel_s2_general: need M - k >= 1");
    const cplx c(-M - p, qc);
    const double h = rr_norm(M - k - 1, c);
    const double sX = std::sin(X / M);
    if (near_diagonal(X, Y)) {
        const cplx d = rr_weighted_scaled_deriv(M, k, p, qc, X) * rr_weighted_scaled(M, k + 1, p, qc, X) -
                       rr_weighted_scaled(M, k, p, qc, X) * rr_weighted_scaled_deriv(M, k + 1, p, qc, X);
        return (d / h).real();
    }
    const double sY = std::sin(Y / M);
    const cplx num = rr_weighted_scaled(M, k, p, qc, X) * rr_weighted_scaled(M, k + 1, p, qc, Y) -
                     rr_weighted_scaled(M, k, p, qc, Y) * rr_weighted_scaled(M, k + 1, p, qc, X);
    return (num * sX * sY / (h * std::sin((X - Y) / M)) / (M * sX * sX)).real();
}

double kernel_s2_scaled(double X, double Y, const EnsembleParams& e, double scale) {
    require_beta(e, 2, "kernel_s2_scaled");
    const double s = effective_scale(e, scale);
    const double r = e.N / s;
    return kernel_s2_general(e.N, 0, e.p, e.q, X * r, Y * r) * r;
}

double kernel_s2(double x, double y, const EnsembleParams& e) {
    require_beta(e, 2, "kernel_s2");
    const double X = e.N * (kPi / 2.0 + std::atan(x));
    const double Y = e.N * (kPi / 2.0 + std::atan(y));
    return kernel_s2_scaled(X, Y, e) / scaled_point_map(X, e.N).jacobian;
}

double w1_integral_closed(const EnsembleParams& e) {
    const double P = e.N + e.p;
    const double lg = log_gamma(P / 2.0) + log_gamma((P + 1.0) / 2.0) -
                      2.0 * log_gamma(cplx((P + 1.0) / 2.0, e.q)).real();
    return std::sqrt(kPi) * std::exp(lg);
}

double w1_moment_closed(const EnsembleParams& e) {
    const double p = e.p;
    const double lg = log_gamma((p + 2.0) / 2.0) + log_gamma((2.0 * p + 5.0) / 2.0) +
                      log_gamma((p + 3.0) / 2.0) - 2.0 * log_gamma(cplx((p + 3.0) / 2.0, e.q)).real() +
                      log_gamma((e.N - 1.0) / 2.0) - log_gamma((e.N + 2.0 * p + 3.0) / 2.0);
    return std::exp(lg);
}

cplx tail_integral(int degree, double upper_X, const EnsembleParams& e, double tol) {
    e.validate();
    if (e.beta == 1) {
        if (degree < 0 || degree > e.N) throw ValidationError("tail_integral: degree out of range");
        return weighted_tail(e.N, e.N - degree, e.p, 2.0 * e.q, upper_X, tol);
    }
    if (e.beta == 4) {
        const int M = 2 * e.N;
        if (degree < 0 || degree > M) throw ValidationError("tail_integral: degree out of range");
        return weighted_tail(M, M - degree, 2.0 * e.p, e.q, 2.0 * upper_X, tol);
    }
    throw ValidationError("tail_integral: beta must be 1 or 4");
}

double kernel_s1_scaled(double X, double Y, const EnsembleParams& e, double scale) {
    require_beta(e, 1, "kernel_s1_scaled");
    const double s = effective_scale(e, scale);
    const double r = e.N / s;
    X *= r;
    Y *= r;
    const int N = e.N;
    const double p = e.p;
    const double qc = 2.0 * e.q;
    const cplx c(-N - p, qc);
    const double sX = std::sin(X / N);
    const double sY = std::sin(Y / N);
    const double jac = 1.0 / (N * sX * sX);
    auto phi = [&](int k, double S) { return rr_weighted_scaled(N, k, p, qc, S); };
    auto part = [&](int k) { return weighted_tail(N, k, p, qc, X, 1e-12); };

    cplx val;
    if (N % 2 == 0) {
        const double g = (p + 1.0) / rr_norm(N - 2, c);
        const double full = w1_moment_closed(e);
        val = (sY / sX) * kernel_s2_general(N, 1, p, qc, X, Y) +
              0.5 * g * sY * phi(1, Y) * (2.0 * part(2) - full) * jac;
    } else {
        auto full = [&](int k) { return weighted_tail(N, k, p, qc, N * kPi, 1e-12); };
        const cplx full1 = full(1);
        // s~_{N-1} = full1 / 2
        val = sY * phi(1, Y) / full1 * jac;
        if (N >= 3) {
            const double g3 = (p + 2.0) / rr_norm(N - 3, c);
            const cplx full2 = full(2), full3 = full(3);
            const cplx sg1 = 2.0 * part(1) - full1;
            const cplx sg2 = 2.0 * part(2) - full2;
            const cplx sg3 = 2.0 * part(3) - full3;
            val += (sY / sX) * kernel_s2_general(N, 2, p, qc, X, Y) +
                   0.5 * g3 * sY * phi(2, Y) * sg3 * jac;
            val -= 0.5 * g3 * (full3 / full1) * sY * (phi(2, Y) * sg1 - phi(1, Y) * sg2) * jac;
        }
    }
    return val.real() * r;
}

double kernel_s1(double x, double y, const EnsembleParams& e, Parity parity) {
    require_beta(e, 1, "kernel_s1");
    const bool even = e.N % 2 == 0;
    if (even != (parity == Parity::even)) throw ValidationError("kernel_s1: parity does not match N");
    if (even && e.N < 2) throw ValidationError("kernel_s1: even N must be >= 2");
    const double X = e.N * (kPi / 2.0 + std::atan(x));
    const double Y = e.N * (kPi / 2.0 + std::atan(y));
    return kernel_s1_scaled(X, Y, e) / scaled_point_map(X, e.N).jacobian;
}

double kernel_s4_scaled(double X, double Y, const EnsembleParams& e, double scale) {
    require_beta(e, 4, "kernel_s4_scaled");
    const double s = effective_scale(e, scale);
    const double r = e.N / s;
    X *= r;
    Y *= r;
    const int N = e.N;
    const int M = 2 * N;
    const double p2 = 2.0 * e.p;
    const double qc = e.q;
    const cplx c(-M - p2, qc);
    const double sX = std::sin(X / N);
    const double sY = std::sin(Y / N);
    const double g = p2 / rr_norm(M - 1, c);
    const cplx head = weighted_tail(M, 1, p2, qc, 2.0 * X, 1e-12);
    const cplx val = (sY / sX) * kernel_s2_general(M, 0, p2, qc, 2.0 * X, 2.0 * Y) +
                     0.5 * g * sY * rr_weighted_scaled(M, 0, p2, qc, 2.0 * Y) * head / (N * sX * sX);
    return val.real() * r;
}

double kernel_s4(double x, double y, const EnsembleParams& e) {
    require_beta(e, 4, "kernel_s4");
    const double X = e.N * (kPi / 2.0 + std::atan(x));
    const double Y = e.N * (kPi / 2.0 + std::atan(y));
    return kernel_s4_scaled(X, Y, e) / scaled_point_map(X, e.N).jacobian;
}

double correlation_det(const std::vector<double>& points, const EnsembleParams& e) {
    require_beta(e, 2, "correlation_det");
    const auto k = Eigen::Index(points.size());
    if (k == 0) throw ValidationError("correlation_det: empty point list");
    Eigen::MatrixXd m(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) m(i, j) = kernel_s2(points[i], points[j], e);
    return m.determinant();
}

}  // namespace specsing
