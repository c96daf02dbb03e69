#include "specsing/density.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "specsing/errors.hpp"
#include "specsing/fit.hpp"
#include "specsing/jack_series.hpp"
#include "specsing/parallel.hpp"

namespace specsing {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};
constexpr double kMaxEvaluations = 60.0 * 60.0 * 60.0 * 60.0;

// Integrand pieces on the ordered sector lo < t_1 < ... < t_dim < lo + period.
struct SectorIntegrand {
    // per-coordinate factor; d_end = distance to the nearer end of the period
    std::function<cplx(double t, double d_end)> node;
    // additive moment, empty means f = 1
    std::function<cplx(double t, double d_end)> moment;
    double pair_exponent = 0.0;  // |e^{2πi t_k/P} - e^{2πi t_j/P}|^{pair_exponent}
};

struct SectorState {
    std::vector<double> t, dlo, dhi, gap;
};

cplx sector_recurse(int j, int dim, double lo, double period, const QuadratureRule& base,
                    const SectorIntegrand& f, SectorState& st, cplx prod, cplx msum) {
    const double start = (j == 0) ? lo : st.t[j - 1];
    const double start_dlo = (j == 0) ? 0.0 : st.dlo[j - 1];
    const double len = (j == 0) ? period : st.dhi[j - 1];
    cplx acc = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i) {
        const double llo = len * base.dist_lo[i];
        const double lhi = len * base.dist_hi[i];
        st.gap[j] = llo;
        st.dlo[j] = start_dlo + llo;
        st.dhi[j] = lhi;
        st.t[j] = llo < lhi ? start + llo : (lo + period) - lhi;
        const double d_end = std::min(st.dlo[j], st.dhi[j]);
        cplx v = prod * f.node(st.t[j], d_end);
        if (f.pair_exponent != 0.0) {
            double d = 0.0;
            double pairs = 1.0;
            for (int k = j - 1; k >= 0; --k) {
                d += st.gap[k + 1];
                const double wrap = st.dlo[k] + st.dhi[j];
                pairs *= 2.0 * std::sin(kPi * std::min(d, wrap) / period);
            }
            v *= std::pow(pairs, f.pair_exponent);
        }
        if (v == 0.0) continue;
        const cplx m = f.moment ? msum + f.moment(st.t[j], d_end) : msum;
        const double w = len * base.weights[i];
        if (j + 1 == dim)
            acc += w * (f.moment ? v * m : v);
        else
            acc += w * sector_recurse(j + 1, dim, lo, period, base, f, st, v, m);
    }
    return acc;
}

// dim! times the ordered-sector integral, parallel over the outermost node.
cplx sector_integral(int dim, double lo, double period, const QuadratureRule& base, const SectorIntegrand& f) {
    const std::size_t n = base.size();
    const std::vector<cplx> parts = parallel_map<cplx>(n, [&](std::size_t i) -> cplx {
        SectorState st;
        st.t.assign(dim, 0.0);
        st.dlo.assign(dim, 0.0);
        st.dhi.assign(dim, 0.0);
        st.gap.assign(dim, 0.0);
        QuadratureRule one;
        one.nodes = {base.nodes[i]};
        one.weights = {base.weights[i]};
        one.dist_lo = {base.dist_lo[i]};
        one.dist_hi = {base.dist_hi[i]};
        one.lo = base.lo;
        one.hi = base.hi;
        // first coordinate fixed to node i, the rest recurse on the full base rule
        const double llo = period * base.dist_lo[i];
        const double lhi = period * base.dist_hi[i];
        st.gap[0] = llo;
        st.dlo[0] = llo;
        st.dhi[0] = lhi;
        st.t[0] = llo < lhi ? lo + llo : (lo + period) - lhi;
        const double d_end = std::min(llo, lhi);
        const cplx v = f.node(st.t[0], d_end);
        if (v == 0.0) return 0.0;
        const cplx m = f.moment ? f.moment(st.t[0], d_end) : cplx(0.0);
        const double w = period * base.weights[i];
        if (dim == 1) return w * (f.moment ? v * m : v);
        return w * sector_recurse(1, dim, lo, period, base, f, st, v, m);
    });
    double fact = 1.0;
    for (int k = 2; k <= dim; ++k) fact *= k;
    return fact * pairwise_sum(parts);
}

void require_base01(const QuadratureRule& base) {
    if (base.lo != 0.0 || base.hi != 1.0) throw ValidationError("base quadrature rule must live on [0, 1]");
}

void require_integral_beta(int beta) {
    if (beta != 2 && beta != 4) throw ValidationError("integral path supports beta in {2, 4}");
}

void require_even_beta(const EnsembleParams& e) {
    e.validate();
    if (e.beta % 2 != 0) throw ValidationError("density needs an even beta");
}

// 2 sin(d/2) = |1 + e^{it}| for t at distance d from ±π
double one_plus_modulus(double d_end) { return 2.0 * std::sin(0.5 * d_end); }

cplx morris_ratio_constant(const EnsembleParams& e, int n) {
    const double b = e.beta;
    const double al = b / 2.0;
    const cplx num = n == 0 ? cplx(1.0)
                            : morris_closed({cplx((e.p - 1.0) * al, e.q), cplx((e.p + 1.0) * al, -e.q), al, n});
    const cplx den = morris_closed({cplx(e.p * al, e.q), cplx(e.p * al, -e.q), al, n + 1});
    return double(n + 1) * num / den;
}

double check_real_density(cplx rho, const char* who) {
    const double scale = std::abs(rho);
    if (std::abs(rho.imag()) > 1e-8 * scale + 1e-14)
        throw DensityError(std::string(who) + ": imaginary part " + std::to_string(rho.imag()) +
                           " exceeds tolerance");
    if (rho.real() < -1e-8 * scale - 1e-14)
        throw DensityError(std::string(who) + ": negative density " + std::to_string(rho.real()));
    return rho.real();
}

}  // namespace

DensityTilde DensityTilde::from(const EnsembleParams& e) {
    const double b = e.beta;
    return {2.0 * e.p + 2.0 / b - 1.0, cplx(-e.p - 1.0, 2.0 * e.q / b)};
}

cplx morris_closed(const MorrisParams& m) {
    if (m.N < 0) throw ValidationError("morris_closed: N must be >= 0");
    if (!(m.lambda > 0.0)) throw ValidationError("morris_closed: lambda must be positive");
    cplx lg = 0.0;
    const double l = m.lambda;
    for (int j = 0; j < m.N; ++j) {
        lg += log_gamma(l * j + m.a + m.b + 1.0) + log_gamma(cplx(l * (j + 1) + 1.0)) -
              log_gamma(l * j + m.a + 1.0) - log_gamma(l * j + m.b + 1.0) - log_gamma(cplx(1.0 + l));
    }
    return std::exp(lg);
}

cplx morris_quadrature(const MorrisParams& m, const QuadratureRule& base) {
    if (m.N < 1 || m.N > 3) throw ValidationError("morris_quadrature: N must be 1, 2 or 3");
    require_base01(base);
    SectorIntegrand f;
    const cplx ab = m.a + m.b;
    const cplx amb = m.a - m.b;
    f.node = [=](double t, double d_end) -> cplx {
        return std::exp(kI * kPi * t * amb + ab * std::log(2.0 * std::sin(kPi * d_end)));
    };
    f.pair_exponent = 2.0 * m.lambda;
    return sector_integral(m.N, -0.5, 1.0, base, f);
}

cplx morris_quadrature(const MorrisParams& m, int level) {
    const double e = std::min({m.a.real() + m.b.real(), 2.0 * m.lambda, 0.0});
    return morris_quadrature(m, tanh_sinh_rule(0.0, 1.0, level, tanh_sinh_tmax(e)));
}

cplx morris_quadrature_converged(const MorrisParams& m, double tol, int max_level) {
    cplx prev = morris_quadrature(m, 2);
    for (int level = 3; level <= max_level; ++level) {
        const cplx cur = morris_quadrature(m, level);
        if (std::abs(cur - prev) <= tol * std::abs(cur)) return cur;
        prev = cur;
    }
    throw ConvergenceError("morris_quadrature: levels disagree at level " + std::to_string(max_level));
}

cplx i_integral(IKind kind, double theta, const EnsembleParams& e, Moment fm, const IntegralControl& ctrl) {
    e.validate();
    require_integral_beta(e.beta);
    const int beta = e.beta;
    const DensityTilde dt = DensityTilde::from(e);
    const cplx ab = dt.a_tilde + dt.b_tilde;
    const cplx amb = dt.a_tilde - dt.b_tilde;
    if (!(ab.real() > -1.0 + (fm == Moment::sum_inv ? 1.0 : 0.0)))
        throw ValidationError("i_integral: endpoint singularity not integrable for these p, beta");

    SectorIntegrand f;
    f.pair_exponent = 4.0 / beta;
    const int n = e.N - 1;
    const cplx shift = 1.0 - std::exp(-kI * theta);
    f.node = [=](double t, double d_end) -> cplx {
        const cplx w = std::exp(kI * t * amb / 2.0 + ab * std::log(one_plus_modulus(d_end)));
        if (kind == IKind::finite_N) return w * std::pow(1.0 + shift * std::exp(kI * t), n);
        return w * std::exp(kI * theta * std::exp(kI * t));
    };
    if (kind == IKind::weighted && fm != Moment::one) {
        f.moment = [=](double t, double d_end) -> cplx {
            switch (fm) {
                case Moment::sum_exp: return std::exp(kI * t);
                case Moment::sum_exp2: return std::exp(2.0 * kI * t);
                default: return std::exp(-0.5 * kI * t) / one_plus_modulus(d_end);
            }
        };
    }
    if (kind != IKind::weighted && fm != Moment::one)
        throw ValidationError("i_integral: moments apply to the weighted kind only");

    const double exps = std::min({ab.real() - (fm == Moment::sum_inv ? 1.0 : 0.0), f.pair_exponent, 0.0});
    const double tmax = tanh_sinh_tmax(exps);
    cplx prev = sector_integral(beta, -kPi, 2.0 * kPi, tanh_sinh_rule(0.0, 1.0, ctrl.start_level, tmax), f);
    for (int level = ctrl.start_level + 1; level <= ctrl.max_level; ++level) {
        const QuadratureRule rule = tanh_sinh_rule(0.0, 1.0, level, tmax);
        if (std::pow(double(rule.size()), beta) > kMaxEvaluations)
            throw ConvergenceError("i_integral: node cap reached at level " + std::to_string(level - 1) +
                                   " before two levels agreed");
        const cplx cur = sector_integral(beta, -kPi, 2.0 * kPi, rule, f);
        if (std::abs(cur - prev) <= ctrl.tol * std::abs(cur)) {
            if (kind == IKind::finite_N) {
                const cplx norm = std::pow(2.0 * kPi, beta) *
                                  morris_closed({cplx(dt.a_tilde), dt.b_tilde, 2.0 / beta, beta});
                return cur / norm;
            }
            return cur;
        }
        prev = cur;
    }
    throw ConvergenceError("i_integral: successive levels disagree at level " + std::to_string(ctrl.max_level));
}

double rho_finite(double theta, const EnsembleParams& e, DensityPath path) {
    require_even_beta(e);
    if (!(theta > 0.0 && theta < 2.0 * kPi)) throw ValidationError("rho_finite: theta must lie in (0, 2 pi)");
    // uniform weight; the closed form is a removable 0 * inf here
    if (e.p == 0.0 && e.q == 0.0) return e.N / (2.0 * kPi);
    const double b = e.beta;
    const int n = e.N - 1;
    const cplx pre = morris_ratio_constant(e, n) *
                     std::exp(-e.q * theta + kI * (n * b * theta / 2.0)) *
                     std::pow(2.0 * std::sin(theta / 2.0), e.p * b);
    cplx F;
    if (path == DensityPath::jack) {
        const cplx lower = -double(n) - e.p - 2.0 * cplx(1.0, e.q) / b + 2.0;
        F = hyper_pfq_alpha({cplx(-n), cplx(e.p + 1.0, -2.0 * e.q / b)}, {lower}, b / 2.0, e.beta,
                            std::exp(-kI * theta));
    } else {
        require_integral_beta(e.beta);
        const DensityTilde dt = DensityTilde::from(e);
        IntegralControl ctrl;
        ctrl.max_level = e.beta == 2 ? 7 : 5;
        ctrl.tol = 1e-10;
        const cplx I = i_integral(IKind::finite_N, theta, e, Moment::one, ctrl);
        F = I * morris_closed({cplx(dt.a_tilde), dt.b_tilde, 2.0 / b, e.beta}) /
            morris_closed({cplx(dt.a_tilde + n), dt.b_tilde, 2.0 / b, e.beta});
    }
    const cplx rho = pre * F * std::exp(e.q * kPi) / (2.0 * kPi);
    return check_real_density(rho, "rho_finite");
}

double c_beta_constant(const EnsembleParams& e) {
    const double b = e.beta;
    const double pb = e.p * b;
    const double lg = pb * std::log(b / 2.0) + log_gamma(1.0 + b / 2.0) +
                      2.0 * log_gamma(cplx(pb / 2.0 + 1.0, e.q)).real() - log_gamma(pb + b / 2.0 + 1.0) -
                      log_gamma(pb + 1.0);
    return std::exp(lg) / (2.0 * kPi);
}

double rho_limit(double theta, const EnsembleParams& e, DensityPath path) {
    require_even_beta(e);
    if (!(theta > 0.0)) throw ValidationError("rho_limit: theta must be positive");
    const double b = e.beta;
    cplx F;
    if (path == DensityPath::jack) {
        F = hyper_pfq_alpha({cplx(e.p + 1.0, -2.0 * e.q / b)}, {cplx(2.0 * e.p + 2.0)}, b / 2.0, e.beta,
                            cplx(0.0, -theta));
    } else {
        require_integral_beta(e.beta);
        const DensityTilde dt = DensityTilde::from(e);
        IntegralControl ctrl;
        ctrl.max_level = e.beta == 2 ? 7 : 5;
        ctrl.tol = 1e-10;
        F = i_integral(IKind::infinity, theta, e, Moment::one, ctrl) /
            (std::pow(2.0 * kPi, b) * morris_closed({cplx(dt.a_tilde), dt.b_tilde, 2.0 / b, e.beta}));
    }
    const cplx rho = std::exp(e.q * kPi) * c_beta_constant(e) * std::exp(kI * b * theta / 2.0) *
                     std::pow(theta, e.p * b) * F;
    return check_real_density(rho, "rho_limit");
}

DensityExpansion density_expansion_check(double theta, const EnsembleParams& e, const std::vector<int>& N_list,
                                         DensityPath path) {
    require_even_beta(e);
    if (N_list.size() < 3) throw ValidationError("density_expansion_check: need >= 3 N values");
    for (std::size_t i = 1; i < N_list.size(); ++i)
        if (N_list[i] <= N_list[i - 1]) throw ValidationError("density_expansion_check: N_list must ascend");

    DensityExpansion out;
    out.N_values = N_list;
    out.rho_inf = rho_limit(theta, e, DensityPath::jack);
    const double h = 1e-3 * theta;
    auto g = [&](double t) { return t * rho_limit(t, e, DensityPath::jack); };
    const double dg = (g(theta - 2 * h) - 8.0 * g(theta - h) + 8.0 * g(theta + h) - g(theta + 2 * h)) / (12.0 * h);
    out.l1_predicted = e.p * dg;

    const std::size_t m = N_list.size();
    out.scaled.resize(m);
    out.scaled_tuned.resize(m);
    parallel_for(2 * m, [&](std::size_t i) {
        EnsembleParams en = e;
        en.N = N_list[i % m];
        const double s = (i < m) ? double(en.N) : en.N + e.p;
        const double v = rho_finite(theta / s, en, path) / s;
        (i < m ? out.scaled : out.scaled_tuned)[i % m] = v;
    });
    std::vector<double> Ns, after, tuned;
    for (std::size_t i = 0; i < m; ++i) {
        const double N = N_list[i];
        const double l1 = N * (out.scaled[i] - out.rho_inf);
        out.l1_gap.push_back(std::abs(l1 - out.l1_predicted));
        Ns.push_back(N);
        after.push_back(std::abs(out.scaled[i] - out.rho_inf - out.l1_predicted / N));
        tuned.push_back(std::abs(out.scaled_tuned[i] - out.rho_inf));
    }
    out.l1_measured = double(N_list.back()) * (out.scaled.back() - out.rho_inf);
    const LogLogFit fa = fit_loglog(Ns, after);
    const LogLogFit ft = fit_loglog(Ns, tuned);
    out.slope_after_l1 = fa.slope;
    out.r2_after_l1 = fa.r2;
    out.slope_tuned = ft.slope;
    out.r2_tuned = ft.r2;
    return out;
}

}  // namespace specsing
