#include <cmath>

#include "doctest.h"
#include "specsing/errors.hpp"
#include "specsing/jack_series.hpp"

using namespace specsing;

TEST_CASE("partition enumeration") {
    int weight6 = 0;
    for (const Partition& k : partitions_up_to(6, 6))
        if (weight(k) == 6) ++weight6;
    CHECK(weight6 == 11);
    CHECK(partitions_up_to(3, 4).size() == 11);

    int prev = 0;
    for (const Partition& k : partitions_up_to(3, 8, 2)) {
        CHECK(k.size() <= 3);
        for (int part : k) CHECK(part <= 2);
        CHECK(weight(k) >= prev);
        prev = weight(k);
    }
}

TEST_CASE("Jack polynomials at equal arguments sum to (m x)^n") {
    const cplx x(0.3, -0.4);
    for (double alpha : {0.5, 1.0, 2.0})
        for (int m : {1, 2, 4})
            for (int n : {1, 3, 5}) {
                cplx s = 0.0;
                for (const Partition& k : partitions_up_to(m, n))
                    if (weight(k) == n) s += jack_principal(k, alpha, m, x);
                CHECK(std::abs(s - std::pow(double(m) * x, n)) <= 1e-13);
            }
}

TEST_CASE("one variable reduces to the classical series") {
    const cplx b(1.5, -0.35), c(3.0, 0.0), x(0.0, -0.8);
    CHECK(std::abs(hyper_pfq_alpha({cplx(-7.0), b}, {c}, 2.0, 1, x) - hyp2f1_terminating(7, b, c, x)) <= 1e-13);
    CHECK(std::abs(hyper_pfq_alpha({b}, {c}, 0.5, 1, x) - hyp1f1(b, c, x)) <= 1e-13);
}

TEST_CASE("generalized Pochhammer with one part is the ordinary one") {
    const cplx a(2.0, 0.5);
    CHECK(std::abs(gen_pochhammer(a, {4}, 1.7) - pochhammer(a, 4)) <= 1e-13);
    // second part shifts by -1/alpha
    CHECK(std::abs(gen_pochhammer(a, {2, 1}, 2.0) - pochhammer(a, 2) * pochhammer(a - 0.5, 1)) <= 1e-13);
}

TEST_CASE("0F0 at alpha = 1 is exp(m x)") {
    const cplx x(0.4, 0.9);
    for (int m : {1, 2, 3})
        CHECK(std::abs(hyper_pfq_alpha({}, {}, 1.0, m, x) - std::exp(double(m) * x)) <= 1e-12);
}

TEST_CASE("duality ratio is 1 at t = 0 and matches the direct sum") {
    const int n = 5;
    const cplx b(2.5, -0.35), c(3.0, 0.4);
    for (int m : {2, 4}) {
        const double alpha = 2.0;
        CHECK(std::abs(duality_ratio_2f1(n, b, c, alpha, m, 0.0) - 1.0) <= 1e-13);
        const cplx t(0.2, -0.6);
        const cplx direct = hyper_pfq_alpha({cplx(-n), b}, {c}, alpha, m, t);
        CHECK(std::abs(duality_ratio_2f1(n, b, c, alpha, m, t) - direct) <= 1e-12 * std::abs(direct));
    }
}

TEST_CASE("non-terminating series reports non-convergence") {
    PfqControl ctrl;
    ctrl.max_weight = 4;
    CHECK_THROWS_AS(hyper_pfq_alpha({cplx(1.5)}, {cplx(2.0)}, 1.0, 2, cplx(0.0, -30.0), ctrl), ConvergenceError);
}

TEST_CASE("terminating series against an extended-precision evaluation") {
    // 2F1^{(2)}(-5, 2.5 - 0.35i; -3.5 - 0.7i; (0.2 - 0.6i) 1_m), 50-digit reference values
    const cplx b(2.5, -0.35), c(-3.5, -0.7), t(0.2, -0.6);
    const cplx m2(14.749500680801197, -9.9753645192409106);
    const cplx m4(-429.68923216125211, 163.188267585148);
    CHECK(std::abs(hyper_pfq_alpha({cplx(-5.0), b}, {c}, 2.0, 2, t) - m2) <= 1e-13 * std::abs(m2));
    CHECK(std::abs(hyper_pfq_alpha({cplx(-5.0), b}, {c}, 2.0, 4, t) - m4) <= 1e-13 * std::abs(m4));
}
