#include <cmath>

#include "doctest.h"
#include "specsing/asymptotics.hpp"
#include "specsing/errors.hpp"
#include "specsing/fit.hpp"

using namespace specsing;

TEST_CASE("log-log fit recovers an exact power law") {
    const std::vector<double> x{10, 20, 40, 80};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * std::pow(v, -1.5));
    const LogLogFit f = fit_loglog(x, y);
    CHECK(f.slope == doctest::Approx(-1.5).epsilon(1e-12));
    CHECK(f.r2 == doctest::Approx(1.0));
    CHECK_THROWS_AS(fit_loglog({1, 2}, {1, 2}), ValidationError);
}

TEST_CASE("robust fit drops a contaminated first point") {
    const std::vector<double> x{10, 20, 40, 80, 160};
    std::vector<double> y;
    for (double v : x) y.push_back(std::pow(v, -2.0) * (1.0 + 1e-3 * std::sin(v)));
    y[0] *= 5.0;
    const LogLogFit f = fit_loglog_robust(x, y);
    CHECK(f.dropped_first);
    CHECK(f.slope == doctest::Approx(-2.0).epsilon(1e-2));
}

TEST_CASE("beta = 2 residual scan: slopes and order monotonicity") {
    const EnsembleParams e{2, 1, 1.5, 0.7};
    const std::vector<int> Ns{100, 200, 400, 800};
    const ResidualReport r0 = kernel_residual_scan(2, 2.0, 0.9, e, Ns, 0);
    const ResidualReport r1 = kernel_residual_scan(2, 2.0, 0.9, e, Ns, 1);
    CHECK(r0.status == FitStatus::fitted);
    CHECK(r0.fitted_slope == doctest::Approx(-1.0).epsilon(0.3));
    CHECK(r1.fitted_slope == doctest::Approx(-2.0).epsilon(0.15));
    CHECK(r1.residuals.back() <= r0.residuals.back());
    // Richardson on the order-0 sequence lands within 10x the order-1 residual
    CHECK(std::abs(r0.extrapolated_limit - r0.limit) <= 10.0 * r1.residuals.back());
}

TEST_CASE("tuned scaling removes the 1/N term") {
    const ResidualReport t = tuned_scaling_residual(2, 2.0, 0.9, EnsembleParams{2, 1, 1.5, 0.7}, {50, 100, 200, 400});
    CHECK(t.fitted_slope >= -2.4);
    CHECK(t.fitted_slope <= -1.6);
}

TEST_CASE("expansion kind names round-trip") {
    for (ExpansionKind k : all_expansion_kinds()) CHECK(expansion_kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(expansion_kind_from_string("bogus"), ValidationError);
    CHECK(all_expansion_kinds().size() == 9);
}

TEST_CASE("weight identity is exact at q = 0") {
    const EnsembleParams e{2, 1, 1.5, 0.0};
    CHECK(intermediate_expansion_check(ExpansionKind::weight, 150, 1.3, e) <= 1e-12);
}

TEST_CASE("Pochhammer expansion residual scales as N^-2") {
    const EnsembleParams e{2, 1, 1.5, 0.7};
    ExpansionOptions o;
    o.alpha = 3;
    o.k = 2;
    const double r1 = intermediate_expansion_check(ExpansionKind::poc, 100, 1.1, e, o);
    const double r2 = intermediate_expansion_check(ExpansionKind::poc, 200, 1.1, e, o);
    CHECK(r2 / r1 >= 0.8);
    CHECK(r2 / r1 <= 1.2);
}

TEST_CASE("sine ratio residual follows the -XY/(3N^2) term") {
    const EnsembleParams e{2, 1, 0.0, 0.0};
    ExpansionOptions o;
    o.Y = 2.0 * 0.8;
    // after removing -XY/(3N^2), N^4 |rest| stays bounded
    const BoundednessResult b = intermediate_boundedness(ExpansionKind::sine_ratio, 100, 200, 0.8, e, o);
    CHECK(b.pass);
}

TEST_CASE("every intermediate kind is bounded at two N") {
    const EnsembleParams e{2, 1, 1.5, 0.7};
    for (ExpansionKind k : all_expansion_kinds()) {
        const BoundednessResult b = intermediate_boundedness(k, 100, 200, 0.7, e);
        INFO(to_string(k), " r1=", b.r1, " r2=", b.r2);
        CHECK(b.pass);
    }
}

TEST_CASE("confluent limit residual halves as n doubles") {
    const cplx b(1.5, -0.7), c(4.0, 0.0);
    for (int n : {50, 100, 200}) {
        const double ratio = confluent_limit_residual(2 * n, b, c, 2.0) / confluent_limit_residual(n, b, c, 2.0);
        CHECK(ratio >= 0.4);
        CHECK(ratio <= 0.6);
    }
}
