#include "specsing/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "specsing/finite_kernels.hpp"
#include "specsing/fit.hpp"
#include "specsing/limiting_kernels.hpp"
#include "specsing/parallel.hpp"
#include "specsing/special_fns.hpp"

namespace specsing {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const cplx kI{0.0, 1.0};

double scaled_kernel(int beta, double X, double Y, const EnsembleParams& e, double scale) {
    switch (beta) {
        case 1: return kernel_s1_scaled(X, Y, e, scale);
        case 2: return kernel_s2_scaled(X, Y, e, scale);
        case 4: return kernel_s4_scaled(X, Y, e, scale);
        default: throw ValidationError("kernel scan supports beta in {1, 2, 4}");
    }
}

void check_scan_args(int beta, const std::vector<int>& N_list, int order) {
    if (beta != 1 && beta != 2 && beta != 4) throw ValidationError("beta must be 1, 2 or 4");
    if (order < 0 || order > 2) throw ValidationError("order must be 0, 1 or 2");
    if (order == 2 && beta == 1) throw ValidationError("order 2 needs beta in {2, 4}");
    if (N_list.size() < 3) throw ValidationError("need >= 3 N values");
    for (std::size_t i = 0; i < N_list.size(); ++i) {
        if (N_list[i] < 1) throw ValidationError("N values must be >= 1");
        if (i > 0 && N_list[i] <= N_list[i - 1]) throw ValidationError("N values must ascend");
    }
}

ResidualReport scan(int beta, double X, double Y, const EnsembleParams& params, const std::vector<int>& N_list,
                    int order, bool tuned) {
    check_scan_args(beta, N_list, order);
    const KernelExpansion ex = kernel_expansion(beta, X, Y, params.p, params.q, order == 2);
    const std::vector<double> S = parallel_map<double>(N_list.size(), [&](std::size_t i) {
        EnsembleParams e = params;
        e.beta = beta;
        e.N = N_list[i];
        e.validate();
        return scaled_kernel(beta, X, Y, e, tuned ? e.N + e.p : 0.0);
    });

    ResidualReport r;
    r.N_values = N_list;
    r.limit = ex.K_inf;
    for (std::size_t i = 0; i < N_list.size(); ++i) {
        const double N = N_list[i];
        cplx approx = ex.K_inf;
        if (order >= 1) approx += ex.L1 / N;
        if (order >= 2) approx += *ex.L2 / (N * N);
        r.residuals.push_back(std::abs(S[i] - approx));
    }
    const std::size_t m = N_list.size();
    const double n1 = N_list[m - 2], n2 = N_list[m - 1];
    r.extrapolated_limit = (n2 * S[m - 1] - n1 * S[m - 2]) / (n2 - n1);

    const double floor = 1e3 * std::numeric_limits<double>::epsilon() * std::abs(ex.K_inf);
    for (double v : r.residuals) {
        if (!(v >= floor)) {
            r.status = FitStatus::floor;
            r.fitted_slope = kNaN;
            r.fit_r2 = kNaN;
            return r;
        }
    }
    std::vector<double> Ns(N_list.begin(), N_list.end());
    const LogLogFit f = fit_loglog_robust(Ns, r.residuals);
    r.fitted_slope = f.slope;
    r.fit_r2 = f.r2;
    r.dropped_first = f.dropped_first;
    r.status = f.r2 >= 0.98 ? FitStatus::fitted : FitStatus::inconclusive;
    return r;
}

cplx poch_ratio(int N, int k, int alpha) {
    cplx r = 1.0;
    for (int i = 0; i < alpha; ++i) r *= (-N + k + i) / -double(N);
    return r;
}

// (-N + k)_alpha / ((-1)^alpha N^alpha) through O(1/N^2)
double poc_rhs(int N, int k, int alpha) {
    const double a = alpha;
    const double n = N;
    return 1.0 - a * (2.0 * k + a - 1.0) / (2.0 * n) +
           a * (a - 1.0) * (3.0 * a * a + (12.0 * k - 7.0) * a + 12.0 * k * k - 12.0 * k + 2.0) / (24.0 * n * n);
}

void require_shift(int N, int k) {
    if (k < 0 || k >= N) throw ValidationError("shift k must satisfy 0 <= k < N");
}

}  // namespace

std::string to_string(FitStatus s) {
    switch (s) {
        case FitStatus::fitted: return "fitted";
        case FitStatus::floor: return "floor";
        case FitStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

ResidualReport kernel_residual_scan(int beta, double X, double Y, const EnsembleParams& params,
                                    const std::vector<int>& N_list, int order) {
    return scan(beta, X, Y, params, N_list, order, false);
}

ResidualReport tuned_scaling_residual(int beta, double X, double Y, const EnsembleParams& params,
                                      const std::vector<int>& N_list) {
    return scan(beta, X, Y, params, N_list, 0, true);
}

const std::vector<ExpansionKind>& all_expansion_kinds() {
    static const std::vector<ExpansionKind> kinds = {
        ExpansionKind::poc,  ExpansionKind::weight,  ExpansionKind::polynomial,
        ExpansionKind::norm, ExpansionKind::sine_ratio, ExpansionKind::icc,
        ExpansionKind::tail_b1, ExpansionKind::icc4, ExpansionKind::gamma2N};
    return kinds;
}

std::string to_string(ExpansionKind k) {
    switch (k) {
        case ExpansionKind::poc: return "poc";
        case ExpansionKind::weight: return "weight";
        case ExpansionKind::polynomial: return "polynomial";
        case ExpansionKind::norm: return "norm";
        case ExpansionKind::sine_ratio: return "sine_ratio";
        case ExpansionKind::icc: return "icc";
        case ExpansionKind::tail_b1: return "tail_b1";
        case ExpansionKind::icc4: return "icc4";
        case ExpansionKind::gamma2N: return "gamma2N";
    }
    return "?";
}

ExpansionKind expansion_kind_from_string(const std::string& s) {
    for (ExpansionKind k : all_expansion_kinds())
        if (to_string(k) == s) return k;
    throw ValidationError("unknown expansion kind '" + s + "'");
}

int residual_scale_power(ExpansionKind kind) {
    switch (kind) {
        case ExpansionKind::weight: return 0;
        case ExpansionKind::polynomial:
        case ExpansionKind::tail_b1:
        case ExpansionKind::icc4: return 2;
        case ExpansionKind::sine_ratio: return 4;
        default: return 3;
    }
}

double intermediate_expansion_check(ExpansionKind kind, int N, double X, const EnsembleParams& params,
                                    const ExpansionOptions& opt) {
    if (N < 2) throw ValidationError("intermediate_expansion_check: N must be >= 2");
    if (!(X > 0.0)) throw ValidationError("intermediate_expansion_check: X must be positive");
    const double p = params.p;
    const double q = params.q;
    const double n = N;
    const double scale = std::pow(n, residual_scale_power(kind));

    switch (kind) {
        case ExpansionKind::poc: {
            require_shift(N, opt.k);
            if (opt.alpha < 0) throw ValidationError("poc: alpha must be >= 0");
            return scale * std::abs(poch_ratio(N, opt.k, opt.alpha) - poc_rhs(N, opt.k, opt.alpha));
        }
        case ExpansionKind::weight: {
            // log sqrt(w2(-cot(X/N))) against (N + p) log sin(X/N) + q (X/N - pi/2)
            if (!(X < kPi * n)) throw ValidationError("weight: X must be below N pi");
            const double x = -1.0 / std::tan(X / n);
            const CauchyWeightParams w{cplx(-n - p, q)};
            const double lhs = 0.5 * (w.c.real() * std::log1p(x * x) + 2.0 * w.c.imag() * std::atan(x));
            const double rhs = (n + p) * std::log(std::sin(X / n)) + q * (X / n - kPi / 2.0);
            return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
        }
        case ExpansionKind::polynomial: {
            require_shift(N, opt.k);
            const ConfluentBlock b{p, q, opt.k};
            const cplx a0 = a_confluent(0, b, X), a1 = a_confluent(1, b, X), a2 = a_confluent(2, b, X);
            const cplx z = 2.0 * kI * X;
            const cplx rhs = a0 + (0.5 * z * z * (a1 - a2) - double(opt.k) * z * a1) / n;
            return scale * std::abs(rr_hyper_scaled(N, opt.k, p, q, X) - rhs);
        }
        case ExpansionKind::norm: {
            require_shift(N, opt.k);
            const double pk = p + opt.k;
            const double lhs = 1.0 / rr_norm(N - opt.k, cplx(-n - p, q));
            const double base = hcoef(pk, q) * std::pow(n, 2.0 * pk - 1.0);
            const double rhs = 1.0 + p * (2.0 * pk - 1.0) / n +
                               (pk - 1.0) * (2.0 * pk - 1.0) * (6.0 * p * p - p - opt.k) / (6.0 * n * n);
            return scale * std::abs(lhs / base - rhs);
        }
        case ExpansionKind::sine_ratio: {
            const double Y = opt.Y == 0.0 ? 2.0 * X : opt.Y;
            if (X == Y) throw ValidationError("sine_ratio: X and Y must differ");
            const double lhs = std::sin(X / n) * std::sin(Y / n) / std::sin((X - Y) / n) * n * (X - Y) / (X * Y);
            return scale * std::abs(lhs - (1.0 - X * Y / (3.0 * n * n)));
        }
        case ExpansionKind::icc: {
            require_shift(N, opt.k);
            const double pk = p + opt.k;
            const cplx lhs = std::pow(n * std::sin(X / n) / X, pk) * std::exp(cplx(q, double(opt.k)) * X / n) *
                             rr_hyper_scaled(N, opt.k, p, q, X);
            const cplx rhs = c_tilde(0, opt.k, p, q, X) + c_tilde(1, opt.k, p, q, X) / n +
                             c_tilde(2, opt.k, p, q, X) / (n * n);
            return scale * std::abs(lhs - rhs);
        }
        case ExpansionKind::tail_b1: {
            // beta=1, N even: N^{p+2} ∫_{-inf}^{z(X)} Ĩ_{N-2} w1 against 𝒥_o of C̃_0 + C̃_1/N
            if (N % 2 != 0) throw ValidationError("tail_b1: N must be even");
            EnsembleParams e{1, N, p, q};
            const cplx lhs = std::pow(n, p + 2.0) * tail_integral(N - 2, X, e);
            const cplx rhs = j_o([&](double s) { return c_tilde(0, 2, p, 2.0 * q, s) + c_tilde(1, 2, p, 2.0 * q, s) / n; },
                                 X, p, q);
            return scale * std::abs(lhs - rhs);
        }
        case ExpansionKind::icc4: {
            // beta=4: -N^{2p+1} ∫_{-inf}^{z(X)} Ĩ_{2N-1} w1, C̃ blocks (2p, q, 1) at 2s with 1/(2N)
            EnsembleParams e{4, N, p, q};
            const cplx lhs = -std::pow(n, 2.0 * p + 1.0) * tail_integral(2 * N - 1, X, e);
            const double M = 2.0 * n;
            const cplx rhs = std::exp(-q * kPi / 2.0) *
                             integrate_adaptive(
                                 [&](double s, double, double) -> cplx {
                                     const cplx f = c_tilde(0, 1, 2.0 * p, q, 2.0 * s) +
                                                    c_tilde(1, 1, 2.0 * p, q, 2.0 * s) / M;
                                     return std::exp(-2.0 * kI * s) * std::pow(s, 2.0 * p) * f;
                                 },
                                 0.0, X, 1e-13);
            return scale * std::abs(lhs - rhs);
        }
        case ExpansionKind::gamma2N: {
            // γ_{2N-1} = 2p / h_{2N-1}, c = -2N - 2p + iq, expanded in M = 2N
            const double M = 2.0 * n;
            const double lhs = 2.0 * p / rr_norm(2 * N - 1, cplx(-M - 2.0 * p, q));
            const double base = 2.0 * p * hcoef(2.0 * p + 1.0, q) * std::pow(M, 4.0 * p + 1.0);
            const double rhs = 1.0 + 2.0 * p * (4.0 * p + 1.0) / M +
                               p * (4.0 * p + 1.0) * (24.0 * p * p - 2.0 * p - 1.0) / (3.0 * M * M);
            return scale * std::abs(lhs / base - rhs);
        }
    }
    throw ValidationError("intermediate_expansion_check: unknown kind");
}

BoundednessResult intermediate_boundedness(ExpansionKind kind, int N1, int N2, double X,
                                           const EnsembleParams& params, const ExpansionOptions& opt) {
    BoundednessResult b;
    b.kind = kind;
    b.N1 = N1;
    b.N2 = N2;
    b.r1 = intermediate_expansion_check(kind, N1, X, params, opt);
    b.r2 = intermediate_expansion_check(kind, N2, X, params, opt);
    if (residual_scale_power(kind) == 0) {
        b.pass = b.r1 <= 1e-12 && b.r2 <= 1e-12;
    } else {
        const double ratio = b.r2 / b.r1;
        b.pass = std::isfinite(b.r1) && std::isfinite(b.r2) && b.r1 > 0.0 && ratio >= 0.5 && ratio <= 2.0;
    }
    return b;
}

double confluent_limit_residual(int n, cplx b, cplx c, double t) {
    if (n < 1) throw ValidationError("confluent_limit_residual: n must be >= 1");
    return std::abs(hyp2f1_terminating(n, b, c, cplx(t / n)) - hyp1f1(b, c, cplx(-t)));
}

}  // namespace specsing
