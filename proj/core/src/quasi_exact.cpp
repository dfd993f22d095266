#include "curvos/quasi_exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace curvos {

QuasiExactModel build_example_one(const PhysicalParameters& p, int m_q,
                                  int n_max) {
    if (n_max < 0)
        throw DomainError("build_example_one: n_max must be nonnegative");

    QuasiExactModel model;
    model.potential = harmonic_radial_potential(p);
    model.params = p;
    model.m_q = static_cast<double>(m_q);
    model.label = ModelLabel::ExampleOne;
    model.tag = "eg1";

    std::vector<int> sectors{m_q};
    if (m_q != 0)
        sectors.push_back(-m_q);
    std::sort(sectors.begin(), sectors.end());
    for (int mg : sectors) {
        for (int N = 0; N <= n_max; ++N) {
            RadialState st = higgs_wavefunction(p, N, mg);
            st.potential_tag = model.tag;
            model.known_states.push_back(KnownState{mg, std::move(st)});
        }
    }
    return model;
}

QuasiExactModel build_example_two(const PhysicalParameters& p, double beta,
                                  double m_q) {
    if (!(beta > 0.0))
        throw InvalidBeta("build_example_two: beta must be positive");

    const CoordinateMap map{p.lambda};
    QuasiExactModel model;
    model.potential =
        map_potential_to_radial(crs_identity_potential_view(p, beta), p, m_q, map);
    model.params = p;
    model.m_q = m_q;
    model.label = ModelLabel::ExampleTwo;
    char buf[64];
    std::snprintf(buf, sizeof buf, "eg2(beta=%g)", beta);
    model.tag = buf;

    // Nodeless line state (1 + lambda x^2)^(-beta / 2 lambda), mapped.
    const double lam = p.lambda;
    const double expo = beta / (2.0 * lam);
    auto phi0 = [lam, expo](double x) {
        return std::pow(1.0 + lam * x * x, -expo);
    };

    const int sector = static_cast<int>(std::lround(m_q));
    RadialState ground;
    ground.quantum = QuantumNumbers{0, m_q, sector};
    ground.energy = p.hbar * p.hbar * beta / (2.0 * p.mass);
    ground.wavefunction = map_wavefunction_to_radial(phi0, map);
    ground.potential_tag = model.tag;
    model.known_states.push_back(KnownState{sector, std::move(ground)});
    return model;
}

std::string verdict_name(SectorVerdict v) {
    switch (v) {
    case SectorVerdict::Solvable: return "solvable";
    case SectorVerdict::NotSolvable: return "not-solvable";
    default: return "ambiguous";
    }
}

namespace {

SectorVerdict classify(double residual) {
    if (residual < 1e-5)
        return SectorVerdict::Solvable;
    if (residual > 1e-2)
        return SectorVerdict::NotSolvable;
    return SectorVerdict::Ambiguous;
}

} // namespace

SectorReport sector_report(const QuasiExactModel& model,
                           const std::vector<int>& m_g_range,
                           const std::vector<double>& residual_grid,
                           const OracleConfig& oracle) {
    SectorReport report;
    report.model_tag = model.tag;

    for (int mg : m_g_range) {
        SectorEntry entry;
        entry.m_g = mg;

        const RadialEigenproblem prob =
            discretize(model.potential, model.params, mg, oracle);
        const int k = std::min(3, oracle.num_eigenvalues);
        const OracleResult res = lowest_eigenvalues(prob, k);
        entry.oracle_eigenvalues = res.eigenvalues;
        entry.oracle_convergence = res.convergence_estimate;

        for (const KnownState& ks : model.known_states) {
            StateCheck check;
            check.home_sector = ks.sector;
            check.n_radial = ks.state.quantum.n_radial;
            check.energy = ks.state.energy;
            check.residual =
                residual_norm(model.potential, model.params, mg,
                              ks.state.wavefunction, ks.state.energy,
                              residual_grid);
            check.verdict = classify(check.residual);
            entry.states.push_back(check);
        }
        report.sectors.push_back(std::move(entry));
    }
    return report;
}

} // namespace curvos
