#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "specsing/errors.hpp"
#include "specsing/finite_kernels.hpp"

using namespace specsing;

namespace {

constexpr double kPi = std::numbers::pi;

// ∫ f(x) dx over the line via x = -cot(θ/2)
template <class F>
double line_integral(F f) {
    const auto g = [&](double th, double dlo, double dhi) -> cplx {
        // the integrands vanish like θ^{βp} at both ends; keep the Cayley map invertible
        const double t = std::clamp(dlo < dhi ? dlo : th, 1e-7, 2.0 * kPi - 1e-7);
        const double s = std::sin(t / 2.0);
        return f(-1.0 / std::tan(t / 2.0)) / (2.0 * s * s);
    };
    return integrate_adaptive(g, 0.0, 2.0 * kPi, 1e-11).real();
}

}  // namespace

TEST_CASE("trace of S_{N,2} is N") {
    for (auto e : {EnsembleParams{2, 4, 1.5, 0.7}, EnsembleParams{2, 9, 0.5, 0.0}}) {
        const double t = line_integral([&](double x) { return kernel_s2(x, x, e); });
        CHECK(t == doctest::Approx(e.N).epsilon(1e-9));
    }
}

TEST_CASE("S_{N,2} is symmetric and reproducing") {
    const EnsembleParams e{2, 5, 1.5, 0.7};
    const double x = -0.8, y = 1.9;
    CHECK(kernel_s2(x, y, e) == doctest::Approx(kernel_s2(y, x, e)).epsilon(1e-12));
    const double rep = line_integral([&](double t) { return kernel_s2(x, t, e) * kernel_s2(t, y, e); });
    CHECK(rep == doctest::Approx(kernel_s2(x, y, e)).epsilon(1e-9));
}

TEST_CASE("diagonal branch is continuous with the off-diagonal formula") {
    const EnsembleParams e{2, 30, 1.5, 0.7};
    const double X = 2.1;
    const double on = kernel_s2_scaled(X, X, e);
    const double off = kernel_s2_scaled(X, X + 1e-4, e);
    CHECK(on == doctest::Approx(off).epsilon(1e-3));
}

TEST_CASE("scaled kernel is the line kernel times the jacobian") {
    const EnsembleParams e{2, 11, 1.5, 0.7};
    const double X = 2.0, Y = 0.9;
    const PointMap mx = scaled_point_map(X, e.N), my = scaled_point_map(Y, e.N);
    CHECK(kernel_s2_scaled(X, Y, e) == doctest::Approx(kernel_s2(mx.z, my.z, e) * mx.jacobian).epsilon(1e-11));
}

TEST_CASE("circular case p = q = 0: flat scaled diagonal 1/pi") {
    const EnsembleParams e{2, 16, 0.0, 0.0};
    for (double X : {0.3, 5.0, 20.0}) CHECK(kernel_s2_scaled(X, X, e) == doctest::Approx(1.0 / kPi).epsilon(1e-12));
}

TEST_CASE("correlation determinant") {
    const EnsembleParams e{2, 6, 1.5, 0.7};
    const double x = 0.3, y = -1.1;
    CHECK(correlation_det({x}, e) == doctest::Approx(kernel_s2(x, x, e)).epsilon(1e-13));
    const double two = kernel_s2(x, x, e) * kernel_s2(y, y, e) - kernel_s2(x, y, e) * kernel_s2(y, x, e);
    CHECK(correlation_det({x, y}, e) == doctest::Approx(two).epsilon(1e-12));
    CHECK(correlation_det({x, x}, e) == doctest::Approx(0.0));
}

TEST_CASE("closed forms of the w1 integrals match the tail quadrature") {
    for (auto e : {EnsembleParams{1, 6, 1.5, 0.7}, EnsembleParams{1, 8, 0.8, 0.4}}) {
        const cplx total = tail_integral(0, e.N * kPi, e);
        CHECK(total.real() == doctest::Approx(w1_integral_closed(e)).epsilon(1e-10));
        CHECK(std::abs(total.imag()) <= 1e-10 * total.real());
        const cplx mom = tail_integral(e.N - 2, e.N * kPi, e);
        CHECK(mom.real() == doctest::Approx(w1_moment_closed(e)).epsilon(1e-10));
    }
}

TEST_CASE("traces of S_{N,1} and S_{N,4}") {
    for (auto e : {EnsembleParams{1, 4, 1.5, 0.7}, EnsembleParams{1, 5, 1.5, 0.7}}) {
        const Parity par = e.N % 2 == 0 ? Parity::even : Parity::odd;
        const double t = line_integral([&](double x) { return kernel_s1(x, x, e, par); });
        CHECK(t == doctest::Approx(e.N).epsilon(1e-8));
    }
    const EnsembleParams e4{4, 3, 1.5, 0.7};
    const double t4 = line_integral([&](double x) { return kernel_s4(x, x, e4); });
    CHECK(t4 == doctest::Approx(e4.N).epsilon(1e-8));
}

TEST_CASE("kernel parity and beta checks") {
    CHECK_THROWS_AS(kernel_s1(0.1, 0.2, EnsembleParams{1, 4, 1.5, 0.7}, Parity::odd), ValidationError);
    CHECK_THROWS_AS(kernel_s1_scaled(0.1, 0.2, EnsembleParams{2, 4, 1.5, 0.7}), ValidationError);
}
