// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "specsing/asymptotics.hpp"
#include "specsing/density.hpp"
#include "specsing/errors.hpp"
#include "specsing/finite_kernels.hpp"
#include "specsing/limiting_kernels.hpp"
#include "specsing/parallel.hpp"

using namespace specsing;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome ac1_orthogonality() {
    double worst = 0.0;
    for (auto [p, q] : {std::pair{1.5, 0.7}, {0.5, 0.0}}) {
        const EnsembleParams e{2, 12, p, q};
        std::vector<std::pair<int, int>> nm;
        for (int n = 0; n <= 6; ++n)
            for (int m = 0; m <= 6; ++m) nm.emplace_back(n, m);
        const auto res = parallel_map<double>(nm.size(), [&](std::size_t i) {
            return orthogonality_check(nm[i].first, nm[i].second, e);
        });
        for (double r : res) worst = std::max(worst, r);
    }
    return {worst <= 1e-8, fmt("max rel err %.3g (tol 1e-8)", worst)};
}

Outcome ac2_confluent_rate() {
    bool ok = true;
    std::string d = "ratios";
    const cplx b(1.5, -0.7), c(4.0, 0.0);
    for (double t : {0.7, 2.0}) {
        double prev = confluent_limit_residual(50, b, c, t);
        for (int n : {100, 200, 400}) {
            const double r = confluent_limit_residual(n, b, c, t);
            const double ratio = r / prev;
            ok = ok && ratio >= 0.4 && ratio <= 0.6;
            d += fmt(" %.4f", ratio);
            prev = r;
        }
    }
    return {ok, d + " (band [0.4, 0.6])"};
}

Outcome ac3_bessel_sine() {
    const std::vector<double> xs{0.5, 1.7, 3.2}, ys{0.9, 2.4, 4.1};
    double jmax = 0.0, smax = 0.0;
    for (double X : xs)
        for (double Y : ys) {
            for (double p : {0.5, 1.5}) {
                const cplx k = k_limit(2, X, Y, p, 0.0) * (X / Y);
                jmax = std::max(jmax, std::abs(k - jker_bessel(X, Y, p)));
            }
            const cplx k0 = k_limit(2, X, Y, 0.0, 0.0) * (X / Y);
            smax = std::max(smax, std::abs(k0 - std::sin(X - Y) / (kPi * (X - Y))));
        }
    return {jmax <= 1e-8 && smax <= 1e-10, fmt("Bessel %.3g (tol 1e-8), sine %.3g (tol 1e-10)", jmax, smax)};
}

Outcome ac4_derivative_identity() {
    const std::vector<std::pair<double, double>> grid{{0.8, 0.6}, {0.8, 1.7}, {2.0, 0.6}, {2.0, 1.7}};
    struct Case {
        int beta;
        double p, q, X, Y;
    };
    std::vector<Case> cases;
    for (int b : {1, 2, 4})
        for (auto [p, q] : {std::pair{1.5, 0.7}, {0.8, 0.4}})
            for (auto [X, Y] : grid) cases.push_back({b, p, q, X, Y});
    const auto res = parallel_map<double>(cases.size(), [&](std::size_t i) {
        const Case& c = cases[i];
        return derivative_identity_residual(c.beta, c.X, c.Y, c.p, c.q, 1e-3);
    });
    double worst = 0.0;
    for (double r : res) worst = std::max(worst, r);
    return {worst <= 1e-6, fmt("max residual %.3g over %zu cases (tol 1e-6)", worst, cases.size())};
}

bool slope_ok(const ResidualReport& r, double lo, double hi) {
    return r.status == FitStatus::fitted && r.fitted_slope >= lo && r.fitted_slope <= hi;
}

std::string describe(const char* name, const ResidualReport& r) {
    return fmt(" %s=%.3f(r2 %.4f, %s)", name, r.fitted_slope, r.fit_r2, to_string(r.status).c_str());
}

Outcome ac5_kernel_rates() {
    bool ok = true;
    std::string d;
    const double X = 2.0, Y = 0.9;
    for (int beta : {2, 1, 4}) {
        const EnsembleParams e{beta, 1, 1.5, 0.7};
        const std::vector<int> Ns =
            beta == 2 ? std::vector<int>{100, 200, 400, 800} : std::vector<int>{50, 100, 200, 400};
        const ResidualReport r0 = kernel_residual_scan(beta, X, Y, e, Ns, 0);
        const ResidualReport r1 = kernel_residual_scan(beta, X, Y, e, Ns, 1);
        ok = ok && slope_ok(r0, -1.3, -0.7) && slope_ok(r1, -2.3, -1.7);
        d += fmt("b%d:", beta) + describe("o0", r0) + describe("o1", r1);
        if (beta == 2) {
            const ResidualReport r2 = kernel_residual_scan(beta, X, Y, e, Ns, 2);
            const bool ok2 = r2.status == FitStatus::floor ||
                             (r2.status == FitStatus::fitted && r2.fitted_slope <= -2.7);
            ok = ok && ok2;
            d += describe("o2", r2);
        }
        d += ";";
    }
    return {ok, d};
}

Outcome ac6_tuned_scaling() {
    bool ok = true;
    std::string d;
    for (int beta : {1, 2}) {
        const std::vector<int> Ns =
            beta == 2 ? std::vector<int>{100, 200, 400, 800} : std::vector<int>{50, 100, 200, 400};
        const ResidualReport t = tuned_scaling_residual(beta, 2.0, 0.9, EnsembleParams{beta, 1, 1.5, 0.7}, Ns);
        ok = ok && slope_ok(t, -2.4, -1.6);
        d += fmt("b%d", beta) + describe("tuned", t) + ";";
    }
    const ResidualReport c =
        kernel_residual_scan(2, 2.0, 0.9, EnsembleParams{2, 1, 0.0, 0.0}, {100, 200, 400, 800}, 0);
    ok = ok && slope_ok(c, -2.4, -1.6);
    d += " p=q=0" + describe("o0", c);
    return {ok, d + " (band [-2.4, -1.6])"};
}

Outcome ac7_morris() {
    std::vector<MorrisParams> cases;
    for (int N : {1, 2, 3})
        for (double lam : {0.5, 1.0, 2.0})
            for (auto [a, b] : {std::pair{cplx(0.0), cplx(0.0)}, {cplx(1.0), cplx(0.0)}, {cplx(1.5, 0.7), cplx(1.5, -0.7)}})
                cases.push_back({a, b, lam, N});
    double worst = 0.0;
    for (const MorrisParams& m : cases) {
        const cplx cl = morris_closed(m);
        worst = std::max(worst, std::abs(morris_quadrature_converged(m) - cl) / std::abs(cl));
    }
    return {worst <= 1e-6, fmt("max rel err %.3g over %zu cases (tol 1e-6)", worst, cases.size())};
}

double rho_determinantal(double theta, int N, double p, double qt) {
    const double x = -1.0 / std::tan(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return kernel_s2(x, x, EnsembleParams{2, N, p, -qt}) / (2.0 * s * s);
}

Outcome ac8_density_cross() {
    double wj = 0.0, wi = 0.0;
    for (int N = 1; N <= 5; ++N)
        for (double th : {0.4, 2.0, 5.1}) {
            const EnsembleParams e{2, N, 1.5, 0.7};
            const double ref = rho_determinantal(th, N, e.p, e.q);
            wj = std::max(wj, std::abs(rho_finite(th, e, DensityPath::jack) - ref) / ref);
            wi = std::max(wi, std::abs(rho_finite(th, e, DensityPath::integral) - ref) / ref);
        }
    return {wj <= 1e-6 && wi <= 1e-6, fmt("Jack %.3g, integral %.3g (tol 1e-6)", wj, wi)};
}

Outcome ac9_normalization() {
    bool ok = true;
    std::string d;
    for (auto [beta, N] : {std::pair{2, 4}, {2, 6}, {4, 3}}) {
        const EnsembleParams e{beta, N, 1.5, 0.7};
        const auto f = [&](double x, double dlo, double dhi) -> cplx {
            const double t = dlo < dhi ? std::max(x, dlo) : std::min(x, std::nextafter(2.0 * kPi, 0.0));
            return rho_finite(t, e, DensityPath::jack);
        };
        const double total = integrate_adaptive(f, 0.0, 2.0 * kPi, 1e-10).real();
        ok = ok && std::abs(total - N) <= 1e-4;
        d += fmt(" (b%d,N%d) err %.3g", beta, N, std::abs(total - N));
    }
    return {ok, d + " (tol 1e-4)"};
}

Outcome ac10_density_expansion() {
    bool ok = true;
    std::string d;
    for (double th : {1.0, 2.5}) {
        const DensityExpansion x =
            density_expansion_check(th, EnsembleParams{2, 1, 1.5, 0.7}, {8, 16, 32}, DensityPath::jack);
        const bool dec = x.l1_gap[1] < x.l1_gap[0] && x.l1_gap[2] < x.l1_gap[1];
        const bool s1 = x.slope_after_l1 >= -2.4 && x.slope_after_l1 <= -1.6;
        const bool s2 = x.slope_tuned >= -2.4 && x.slope_tuned <= -1.6;
        ok = ok && dec && s1 && s2;
        d += fmt(" b2 th=%.1f: gaps %.3g>%.3g>%.3g slope %.3f tuned %.3f;", th, x.l1_gap[0], x.l1_gap[1],
                 x.l1_gap[2], x.slope_after_l1, x.slope_tuned);
    }
    // β = 4: only the monotone decrease of the gap over N ∈ {4, 8}
    const EnsembleParams e4{4, 1, 1.5, 0.7};
    const double th = 1.0;
    const double rinf = rho_limit(th, e4, DensityPath::jack);
    const double h = 1e-3 * th;
    const auto g = [&](double t) { return t * rho_limit(t, e4, DensityPath::jack); };
    const double l1 = e4.p * (g(th - 2 * h) - 8.0 * g(th - h) + 8.0 * g(th + h) - g(th + 2 * h)) / (12.0 * h);
    std::vector<double> gaps;
    for (int N : {4, 8}) {
        const EnsembleParams eN{4, N, 1.5, 0.7};
        const double scaled = rho_finite(th / N, eN, DensityPath::jack) / N;
        gaps.push_back(std::abs(N * (scaled - rinf) - l1));
    }
    const bool dec4 = gaps[1] < gaps[0];
    ok = ok && dec4;
    d += fmt(" b4 th=1: gaps %.3g>%.3g", gaps[0], gaps[1]);
    return {ok, d};
}

Outcome ac11_intermediate() {
    bool ok = true;
    std::string d;
    const EnsembleParams e{2, 1, 1.5, 0.7};
    for (ExpansionKind k : all_expansion_kinds()) {
        bool kind_ok = true;
        for (double X : {0.7, 2.0}) {
            const BoundednessResult b = intermediate_boundedness(k, 100, 200, X, e);
            kind_ok = kind_ok && b.pass;
        }
        ok = ok && kind_ok;
        d += fmt(" %s:%s", to_string(k).c_str(), kind_ok ? "ok" : "FAIL");
    }
    return {ok, d};
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* name;
        double time_limit_s;  // 0: none stated
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all{
        {"AC1", "orthogonality suite", 10, ac1_orthogonality},
        {"AC2", "confluent-limit rate", 0, ac2_confluent_rate},
        {"AC3", "Bessel/sine reductions", 0, ac3_bessel_sine},
        {"AC4", "derivative identity", 60, ac4_derivative_identity},
        {"AC5", "kernel convergence rates", 600, ac5_kernel_rates},
        {"AC6", "tuned scaling", 0, ac6_tuned_scaling},
        {"AC7", "Morris integral", 60, ac7_morris},
        {"AC8", "density cross-validation", 0, ac8_density_cross},
        {"AC9", "density normalization", 0, ac9_normalization},
        {"AC10", "density first correction", 900, ac10_density_expansion},
        {"AC11", "intermediate expansion suite", 0, ac11_intermediate},
    };
    int failures = 0;
    for (const Criterion& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit_s > 0 && secs > c.time_limit_s) {
            o.pass = false;
            o.detail += fmt(" [over time limit %.0f s]", c.time_limit_s);
        }
        if (!o.pass) ++failures;
        std::printf("%-5s %s  %s: %s [%.1f s]\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", int(all.size()) - failures, all.size());
    return failures;
}
