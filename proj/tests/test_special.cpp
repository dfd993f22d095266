#include "doctest.h"

#include <cmath>
#include <random>

#include "curvos/special.hpp"

using namespace curvos;

TEST_SUITE_BEGIN("special");

TEST_CASE("pochhammer values") {
    CHECK(pochhammer(2.5, 4) == 216.5625);   // 2.5 * 3.5 * 4.5 * 5.5, exact
    CHECK(pochhammer(-3.0, 3) == -6.0);
    CHECK(pochhammer(-3.0, 5) == 0.0);       // crosses zero at q + 3
    CHECK(pochhammer(7.25, 0) == 1.0);
    CHECK(pochhammer(0.0, 1) == 0.0);
    CHECK_THROWS_AS(pochhammer(1.0, -1), DomainError);
}

TEST_CASE("terminating series frozen values") {
    CHECK(gauss_2f1_terminating(0, 3.7, 2.2, 0.9) == 1.0);
    CHECK(gauss_2f1_terminating(4, 2.0, 3.0, 0.0) == 1.0);
    CHECK(gauss_2f1_terminating(2, 5.0, 3.0, 0.3) ==
          doctest::Approx(0.225).epsilon(1e-13));
    CHECK(gauss_2f1_terminating(3, 2.5, 1.5, 0.7) ==
          doctest::Approx(-0.099).epsilon(1e-12));
    CHECK(gauss_2f1_terminating(5, 8.236, 4.0, 0.5) ==
          doctest::Approx(0.0071505092974795286).epsilon(1e-12));
    const double a = 1.1180339887498949;
    CHECK(gauss_2f1_terminating(4, 3.0 + a, 1.0, 0.36) ==
          doctest::Approx(-0.10389900475902518).epsilon(1e-12));
}

TEST_CASE("pole detection inside the summation range") {
    CHECK_THROWS_AS(gauss_2f1_terminating(5, 1.0, -2.0, 0.5), PoleInC);
    CHECK_THROWS_AS(gauss_2f1_terminating(1, 1.0, 0.0, 0.5), PoleInC);
    // c = -7 is outside the range k < 5, so the value is finite.
    CHECK_NOTHROW(gauss_2f1_terminating(5, 1.0, -7.0, 0.5));
    // n = 0 never touches c.
    CHECK(gauss_2f1_terminating(0, 1.0, 0.0, 0.5) == 1.0);
    CHECK_THROWS_AS(gauss_2f1_terminating(-1, 1.0, 1.0, 0.5), DomainError);
}

TEST_CASE("recurrence matches the explicit pochhammer sum") {
    std::mt19937 rng(321u);
    std::uniform_real_distribution<double> ub(0.5, 5.0);
    std::uniform_real_distribution<double> uz(-1.0, 1.0);
    std::uniform_int_distribution<int> un(0, 8);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = un(rng);
        const double b = ub(rng), c = ub(rng), z = uz(rng);
        double ref = 0.0;
        for (int k = 0; k <= n; ++k) {
            double kfac = 1.0;
            for (int i = 2; i <= k; ++i)
                kfac *= i;
            ref += pochhammer(-n, k) * pochhammer(b, k) /
                   (pochhammer(c, k) * kfac) * std::pow(z, k);
        }
        const double got = gauss_2f1_terminating(n, b, c, z);
        CHECK(std::abs(got - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("swap of the two numerator parameters") {
    // When b is itself a negative integer the series can be summed from
    // either terminating parameter; the polynomial is the same.
    const double z = 0.37;
    CHECK(gauss_2f1_terminating(6, -3.0, 2.5, z) ==
          doctest::Approx(gauss_2f1_terminating(3, -6.0, 2.5, z)).epsilon(1e-12));
    CHECK(gauss_2f1_terminating(5, -2.0, 1.5, -0.8) ==
          doctest::Approx(gauss_2f1_terminating(2, -5.0, 1.5, -0.8)).epsilon(1e-12));
}

TEST_CASE("functor wraps the free function") {
    const TerminatingHypergeometric F{3, 2.5, 1.5};
    CHECK(F(0.7) == gauss_2f1_terminating(3, 2.5, 1.5, 0.7));
    CHECK(F(0.0) == 1.0);
}

TEST_SUITE_END();
