#include "doctest.h"

#include <cmath>

#include "curvos/higgs.hpp"
#include "test_util.hpp"

using namespace curvos;

TEST_SUITE_BEGIN("higgs");

TEST_CASE("wavefunction frozen values") {
    const PhysicalParameters p = canonical_parameters();
    const RadialState s00 = higgs_wavefunction(p, 0, 0);
    CHECK(s00.wavefunction(1.0) ==
          doctest::Approx(0.3393822471582914).epsilon(1e-12));
    const RadialState s12 = higgs_wavefunction(p, 1, 2);
    CHECK(s12.wavefunction(1.0) ==
          doctest::Approx(0.024943633901274635).epsilon(1e-12));
    CHECK(s00.potential_tag == "higgs-harmonic");
    CHECK(s12.quantum.n_radial == 1);
    CHECK(s12.quantum.m_g == 2);
}

TEST_CASE("energies come from the shared level formula") {
    const PhysicalParameters p = canonical_parameters();
    for (int N = 0; N <= 3; ++N)
        for (int m = -3; m <= 3; ++m)
            CHECK(higgs_wavefunction(p, N, m).energy == energy_level(p, N, m));
}

TEST_CASE("small-r branch goes like r^|m|") {
    const PhysicalParameters p = canonical_parameters();
    for (int m : {0, 1, 2, 3}) {
        const RadialState st = higgs_wavefunction(p, 0, m);
        for (double r : {1e-6, 1e-5, 1e-4}) {
            const double ratio = st.wavefunction(r) / std::pow(r, m);
            CHECK(ratio > 0.9);
            CHECK(ratio < 1.1);
        }
    }
}

TEST_CASE("first excited s-state has exactly one node") {
    const PhysicalParameters p = canonical_parameters();
    const RadialState st = higgs_wavefunction(p, 1, 0);
    const auto grid = testutil::log_grid(1e-3, 100.0, 2000);
    double peak = 0.0;
    for (double r : grid)
        peak = std::max(peak, std::abs(st.wavefunction(r)));
    int flips = 0;
    double prev = 0.0;
    for (double r : grid) {
        const double v = st.wavefunction(r);
        if (std::abs(v) < 1e-14 * peak)
            continue;
        if (prev != 0.0 && v * prev < 0.0)
            ++flips;
        prev = v;
    }
    CHECK(flips == 1);
}

TEST_CASE("pointwise operator reproduces eigenpairs") {
    const PhysicalParameters p = canonical_parameters();
    const RadialPotential V = harmonic_radial_potential(p);
    for (auto [N, m] : {std::pair{0, 0}, std::pair{1, 1}, std::pair{0, 2}}) {
        const RadialState st = higgs_wavefunction(p, N, m);
        for (double r : {0.5, 1.0, 2.0}) {
            const double got = higgs_radial_apply(V, p, m, st.wavefunction, r, 1e-3);
            CHECK(got == doctest::Approx(st.energy * st.wavefunction(r)).epsilon(1e-8));
        }
    }
}

TEST_CASE("operator stencil guards") {
    const PhysicalParameters p = canonical_parameters();
    const RadialPotential V = harmonic_radial_potential(p);
    auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(higgs_radial_apply(V, p, 0, one, 1e-4, 1e-4), DomainError);
    CHECK_THROWS_AS(higgs_radial_apply(V, p, 0, one, 1.0, 0.0), DomainError);
    CHECK_NOTHROW(higgs_radial_apply(V, p, 0, one, 1.0, 1e-3));
}

TEST_CASE("angular block reduction is pure regrouping") {
    const PhysicalParameters p = canonical_parameters();
    const auto grid = radial_grid_from_upsilon(1.0, 0.1, 1.4, 50);
    for (auto [N, m] : {std::pair{0, 0}, std::pair{1, 1}, std::pair{0, 3}}) {
        const RadialState st = higgs_wavefunction(p, N, m);
        CHECK(angular_reduction_check(p, m, st, grid) < 1e-12);
    }
}

TEST_CASE("energy quotient sits on the eigenvalue") {
    const PhysicalParameters p = canonical_parameters();
    const RadialPotential V = harmonic_radial_potential(p);
    const auto grid =
        radial_grid_from_upsilon(1.0, std::atan(0.02), 1.5697, 4000);
    for (auto [N, m] : {std::pair{0, 0}, std::pair{2, 2}, std::pair{1, 0}}) {
        const RadialState st = higgs_wavefunction(p, N, m);
        const double q = rayleigh_quotient(V, p, m, st.wavefunction, grid);
        CHECK(q == doctest::Approx(st.energy).epsilon(1e-5));
    }
}

TEST_CASE("degenerate norm is rejected") {
    const PhysicalParameters p = canonical_parameters();
    const RadialPotential V = harmonic_radial_potential(p);
    const auto grid = radial_grid_from_upsilon(1.0, 0.1, 1.4, 50);
    auto zero = [](double) { return 0.0; };
    CHECK_THROWS_AS(rayleigh_quotient(V, p, 0, zero, grid), DegenerateNorm);
}

TEST_CASE("states of one sector are orthogonal under the r weight") {
    const PhysicalParameters p = canonical_parameters();
    for (int m : {0, 2}) {
        for (int N1 = 0; N1 <= 2; ++N1)
            for (int N2 = N1 + 1; N2 <= 2; ++N2) {
                const RadialState a = higgs_wavefunction(p, N1, m);
                const RadialState b = higgs_wavefunction(p, N2, m);
                auto overlap = [&](double u) {
                    const double r = std::tan(u);
                    const double jac = 1.0 + r * r;  // dr/du
                    return a.wavefunction(r) * b.wavefunction(r) * r * jac;
                };
                auto norm_a = [&](double u) {
                    const double r = std::tan(u);
                    const double jac = 1.0 + r * r;
                    const double v = a.wavefunction(r);
                    return v * v * r * jac;
                };
                auto norm_b = [&](double u) {
                    const double r = std::tan(u);
                    const double jac = 1.0 + r * r;
                    const double v = b.wavefunction(r);
                    return v * v * r * jac;
                };
                const double cross = testutil::simpson(overlap, 1e-4, 1.5697, 8001);
                const double na = testutil::simpson(norm_a, 1e-4, 1.5697, 8001);
                const double nb = testutil::simpson(norm_b, 1e-4, 1.5697, 8001);
                CHECK(std::abs(cross) / std::sqrt(na * nb) < 1e-6);
            }
    }
}

TEST_CASE("frozen norm of the ground state") {
    // integral of psi^2 r dr over (0, inf) = 1/(2 (1 + a)).
    const PhysicalParameters p = canonical_parameters();
    const RadialState st = higgs_wavefunction(p, 0, 0);
    auto f = [&](double u) {
        const double r = std::tan(u);
        const double v = st.wavefunction(r);
        return v * v * r * (1.0 + r * r);
    };
    const double got = testutil::simpson(f, 1e-7, 1.5707, 8001);
    CHECK(got == doctest::Approx(0.2360679774997897).epsilon(1e-7));
}

TEST_CASE("upsilon grid helper") {
    const auto g = radial_grid_from_upsilon(4.0, 0.1, 1.4, 11);
    CHECK(g.size() == 11);
    CHECK(g.front() == doctest::Approx(std::tan(0.1) / 2.0).epsilon(1e-15));
    CHECK(g.back() == doctest::Approx(std::tan(1.4) / 2.0).epsilon(1e-15));
    CHECK_THROWS_AS(radial_grid_from_upsilon(1.0, 0.5, 0.4, 10), DomainError);
    CHECK_THROWS_AS(radial_grid_from_upsilon(1.0, 0.1, 1.4, 1), DomainError);
}

TEST_SUITE_END();
