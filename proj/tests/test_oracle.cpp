#include "doctest.h"

#include <cmath>

#include "curvos/oracle.hpp"
#include "test_util.hpp"

using namespace curvos;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("config validation") {
    const PhysicalParameters p = canonical_parameters();
    const RadialPotential V = harmonic_radial_potential(p);

    OracleConfig c;
    c.grid_points = 99;
    CHECK_THROWS_AS(discretize(V, p, 0, c), GridTooCoarse);

    c = OracleConfig{};
    c.grid_points = 100;
    c.num_eigenvalues = 11;  // needs 110 points
    CHECK_THROWS_AS(discretize(V, p, 0, c), GridTooCoarse);

    c = OracleConfig{};
    c.num_eigenvalues = 0;
    CHECK_THROWS_AS(discretize(V, p, 0, c), DomainError);

    c = OracleConfig{};
    c.upsilon_min = 0.9;  // not below pi/4
    CHECK_THROWS_AS(discretize(V, p, 0, c), DomainError);

    c = OracleConfig{};
    c.upsilon_max = 0.7;  // not above pi/4
    CHECK_THROWS_AS(discretize(V, p, 0, c), DomainError);

    c = OracleConfig{};
    c.upsilon_max = 1.95;  // not below pi/2
    CHECK_THROWS_AS(discretize(V, p, 0, c), DomainError);

    c = OracleConfig{};
    c.grid_points = 100;
    CHECK_NOTHROW(discretize(V, p, 0, c));
}

TEST_CASE("discretization structure") {
    const PhysicalParameters p = canonical_parameters();
    const RadialPotential V = harmonic_radial_potential(p);
    OracleConfig c;
    c.grid_points = 200;
    const RadialEigenproblem prob = discretize(V, p, 1, c);

    CHECK(prob.r.size() == 200);
    CHECK(prob.diag.size() == 200);
    CHECK(prob.off.size() == 199);
    CHECK(prob.weight.size() == 200);
    for (std::size_t i = 0; i + 1 < prob.r.size(); ++i)
        CHECK(prob.r[i] < prob.r[i + 1]);
    for (double w : prob.weight)
        CHECK(w > 0.0);
    for (double o : prob.off)
        CHECK(o < 0.0);

    // The left boundary policy only touches the first diagonal entry.
    OracleConfig cz = c;
    cz.left_boundary = LeftBoundary::ZeroFlux;
    const RadialEigenproblem probz = discretize(V, p, 1, cz);
    CHECK(probz.diag[0] < prob.diag[0]);
    CHECK(probz.diag[1] == prob.diag[1]);
    CHECK(probz.off[0] == prob.off[0]);
}

TEST_CASE("harmonic spectrum against the level formula") {
    const PhysicalParameters p = canonical_parameters();
    const RadialPotential V = harmonic_radial_potential(p);
    const OracleConfig c;  // tuned defaults, Auto boundary
    for (int m : {0, 1, 2}) {
        const RadialEigenproblem prob = discretize(V, p, m, c);
        const OracleResult res = lowest_eigenvalues(prob, 3);
        REQUIRE(res.eigenvalues.size() == 3);
        for (int N = 0; N < 3; ++N) {
            const double exact = energy_level(p, N, m);
            CHECK(std::abs(res.eigenvalues[N] - exact) / exact < 1e-3);
        }
        CHECK(res.convergence_estimate > 0.0);
        CHECK(res.convergence_estimate < 1e-2);
    }
}

TEST_CASE("spectrum off the canonical couplings") {
    const auto p = PhysicalParameters::create(1.0, 1.0, 1.0, 0.5);
    const RadialPotential V = harmonic_radial_potential(p);
    const RadialEigenproblem prob = discretize(V, p, 1, OracleConfig{});
    const OracleResult res = lowest_eigenvalues(prob, 2);
    for (int N = 0; N < 2; ++N) {
        const double exact = energy_level(p, N, 1);
        CHECK(std::abs(res.eigenvalues[N] - exact) / exact < 1e-3);
    }
}

TEST_CASE("grid halving shows second-order convergence") {
    const PhysicalParameters p = canonical_parameters();
    const RadialPotential V = harmonic_radial_potential(p);
    const double exact = energy_level(p, 0, 1);
    double err[3];
    int idx = 0;
    for (int n : {500, 1000, 2000}) {
        OracleConfig c;
        c.grid_points = n;
        c.num_eigenvalues = 1;
        const OracleResult res = lowest_eigenvalues(discretize(V, p, 1, c), 1);
        err[idx++] = std::abs(res.eigenvalues[0] - exact);
    }
    CHECK(err[0] / err[1] > 3.2);
    CHECK(err[0] / err[1] < 4.8);
    CHECK(err[1] / err[2] > 3.2);
    CHECK(err[1] / err[2] < 4.8);
}

TEST_CASE("request bounds on eigenvalue count") {
    const PhysicalParameters p = canonical_parameters();
    const RadialPotential V = harmonic_radial_potential(p);
    OracleConfig c;
    c.num_eigenvalues = 2;
    const RadialEigenproblem prob = discretize(V, p, 0, c);
    CHECK_THROWS_AS(lowest_eigenvalues(prob, 3), DomainError);
    CHECK_THROWS_AS(lowest_eigenvalues(prob, 0), DomainError);
    CHECK_NOTHROW(lowest_eigenvalues(prob, 2));
}

TEST_CASE("computed eigenvector tracks the analytic state") {
    const PhysicalParameters p = canonical_parameters();
    const RadialPotential V = harmonic_radial_potential(p);
    const RadialEigenproblem prob = discretize(V, p, 1, OracleConfig{});
    const OracleResult res = lowest_eigenvalues(prob, 1);
    const std::vector<double> psi = lowest_eigenvector(prob, res.eigenvalues[0]);

    const RadialState st = higgs_wavefunction(p, 0, 1);
    double peak = 0.0;
    for (double r : prob.r)
        peak = std::max(peak, std::abs(st.wavefunction(r)));
    double worst = 0.0;
    for (std::size_t i = 0; i < prob.r.size(); ++i)
        worst = std::max(worst,
                         std::abs(psi[i] - st.wavefunction(prob.r[i]) / peak));
    CHECK(worst < 1e-3);
}

TEST_CASE("residual norm on exact and perturbed pairs") {
    const PhysicalParameters p = canonical_parameters();
    const RadialPotential V = harmonic_radial_potential(p);
    const RadialState st = higgs_wavefunction(p, 1, 1);
    const auto grid = radial_grid_from_upsilon(1.0, 0.1, 1.4, 200);
    CHECK(residual_norm(V, p, 1, st.wavefunction, st.energy, grid) < 1e-6);
    CHECK(residual_norm(V, p, 1, st.wavefunction, st.energy * 1.01, grid) > 1e-3);
    auto zero = [](double) { return 0.0; };
    CHECK_THROWS_AS(residual_norm(V, p, 1, zero, st.energy, grid),
                    DegenerateNorm);
}

TEST_CASE("line solver recovers the flat spring ground energy") {
    auto V = [](double x) { return 0.5 * x * x; };
    const double e0 = line_ground_energy(V, 0.5, 8.0, 2001);
    CHECK(std::abs(e0 - 0.5) < 1e-4);
    CHECK_THROWS_AS(line_ground_energy(V, 0.5, -1.0, 100), DomainError);
    CHECK_THROWS_AS(line_ground_energy(V, 0.5, 8.0, 2), DomainError);
}

TEST_SUITE_END();
