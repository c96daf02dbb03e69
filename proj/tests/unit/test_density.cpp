#include <cmath>
#include <numbers>

#include "doctest.h"
#include "specsing/density.hpp"
#include "specsing/errors.hpp"
#include "specsing/finite_kernels.hpp"

using namespace specsing;

namespace {

constexpr double kPi = std::numbers::pi;

// β = 2 density from the line kernel; weight e^{-q̃θ} corresponds to q = -q̃.
double rho_det(double theta, int N, double p, double qt) {
    const double s = std::sin(theta / 2.0);
    const double x = -1.0 / std::tan(theta / 2.0);
    return kernel_s2(x, x, EnsembleParams{2, N, p, -qt}) / (2.0 * s * s);
}

}  // namespace

TEST_CASE("Morris closed form at small N") {
    // N = 1: ∫ e^{πix(a-b)} |1 + e^{2πix}|^{a+b} dx = Γ(1+a+b)/(Γ(1+a)Γ(1+b))
    CHECK(morris_closed({0.0, 0.0, 1.0, 1}).real() == doctest::Approx(1.0));
    CHECK(morris_closed({1.0, 1.0, 1.0, 1}).real() == doctest::Approx(2.0));
    CHECK(morris_closed({2.0, 1.0, 0.5, 1}).real() == doctest::Approx(3.0));
    // a = b = 0, λ = 1: N!
    CHECK(morris_closed({0.0, 0.0, 1.0, 3}).real() == doctest::Approx(6.0));
}

TEST_CASE("Morris closed form against quadrature") {
    for (int N : {1, 2, 3})
        for (double lam : {0.5, 1.0, 2.0}) {
            const MorrisParams m{cplx(1.5, 0.7), cplx(1.5, -0.7), lam, N};
            const cplx cl = morris_closed(m);
            CHECK(std::abs(morris_quadrature_converged(m) - cl) <= 1e-9 * std::abs(cl));
        }
}

TEST_CASE("density constants") {
    const DensityTilde t = DensityTilde::from(EnsembleParams{2, 4, 1.5, 0.7});
    CHECK(t.a_tilde == doctest::Approx(3.0));
    CHECK(t.b_tilde.real() == doctest::Approx(-2.5));
    CHECK(t.b_tilde.imag() == doctest::Approx(0.7));
}

TEST_CASE("beta = 2 density: both paths equal the determinantal diagonal") {
    for (int N : {1, 3, 5})
        for (double th : {0.4, 2.0, 5.1}) {
            const EnsembleParams e{2, N, 1.5, 0.7};
            const double ref = rho_det(th, N, 1.5, 0.7);
            CHECK(rho_finite(th, e, DensityPath::jack) == doctest::Approx(ref).epsilon(1e-10));
            CHECK(rho_finite(th, e, DensityPath::integral) == doctest::Approx(ref).epsilon(1e-8));
        }
}

TEST_CASE("uniform density at p = q = 0") {
    for (int beta : {2, 4})
        CHECK(rho_finite(1.2, EnsembleParams{beta, 7, 0.0, 0.0}, DensityPath::jack) ==
              doctest::Approx(7.0 / (2.0 * kPi)));
    CHECK(rho_limit(0.9, EnsembleParams{2, 1, 0.0, 0.0}, DensityPath::jack) == doctest::Approx(1.0 / (2.0 * kPi)));
}

TEST_CASE("density vanishes like theta^(p beta) at the singularity") {
    const EnsembleParams e{4, 3, 0.5, 0.3};
    const double r1 = rho_finite(1e-3, e, DensityPath::jack);
    const double r2 = rho_finite(2e-3, e, DensityPath::jack);
    CHECK(std::log(r2 / r1) / std::log(2.0) == doctest::Approx(e.p * e.beta).epsilon(1e-2));
}

TEST_CASE("I∞(0) is the Morris constant and the weighted moments relate to it") {
    const EnsembleParams e{2, 1, 1.5, 0.7};
    const DensityTilde t = DensityTilde::from(e);
    const cplx i0 = i_integral(IKind::infinity, 1e-12, e);
    const cplx m = std::pow(2.0 * kPi, 2) * morris_closed({t.a_tilde, t.b_tilde, 1.0, 2});
    CHECK(std::abs(i0 - m) <= 1e-6 * std::abs(m));
}

TEST_CASE("limiting density is the large-N limit of the finite one") {
    const EnsembleParams e{2, 1, 1.5, 0.7};
    const double th = 1.0;
    const double lim = rho_limit(th, e, DensityPath::jack);
    CHECK(rho_limit(th, e, DensityPath::integral) == doctest::Approx(lim).epsilon(1e-9));
    double prev = 1e300;
    for (int N : {8, 16, 32}) {
        const EnsembleParams eN{2, N, 1.5, 0.7};
        const double d = std::abs(rho_finite(th / N, eN, DensityPath::jack) / N - lim);
        CHECK(d < prev);
        prev = d;
    }
}

TEST_CASE("density expansion check at beta = 2") {
    const DensityExpansion d = density_expansion_check(1.0, EnsembleParams{2, 1, 1.5, 0.7}, {8, 16, 32},
                                                       DensityPath::jack);
    CHECK(d.l1_gap[1] < d.l1_gap[0]);
    CHECK(d.l1_gap[2] < d.l1_gap[1]);
    CHECK(d.slope_after_l1 >= -2.4);
    CHECK(d.slope_after_l1 <= -1.6);
    CHECK(d.slope_tuned >= -2.4);
    CHECK(d.slope_tuned <= -1.6);
}

TEST_CASE("density argument validation") {
    const EnsembleParams e{2, 3, 1.5, 0.7};
    CHECK_THROWS_AS(rho_finite(0.0, e, DensityPath::jack), ValidationError);
    CHECK_THROWS_AS(rho_finite(1.0, EnsembleParams{3, 3, 1.5, 0.7}, DensityPath::jack), ValidationError);
    CHECK_THROWS_AS(density_expansion_check(1.0, e, {8, 16}), ValidationError);
}
