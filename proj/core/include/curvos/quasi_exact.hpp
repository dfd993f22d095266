#pragma once

#include <string>
#include <vector>

#include "curvos/crs.hpp"
#include "curvos/higgs.hpp"
#include "curvos/oracle.hpp"
#include "curvos/transform.hpp"

namespace curvos {

// An analytic state together with the angular sector it solves.
struct KnownState {
    int sector = 0;
    RadialState state;
};

enum class ModelLabel { ExampleOne, ExampleTwo };

// A radial potential with closed-form states in some angular sectors only.
struct QuasiExactModel {
    RadialPotential potential;
    PhysicalParameters params;
    double m_q = 0.0;
    std::vector<KnownState> known_states;
    ModelLabel label = ModelLabel::ExampleOne;
    std::string tag;   // printable name, e.g. "eg1" or "eg2(beta=4.236)"
};

// Harmonic model: potential literally (1/2) m w^2 r^2; the sectors
// m_g = +/- m_q carry the full analytic tower N = 0..n_max.
QuasiExactModel build_example_one(const PhysicalParameters& p, int m_q,
                                  int n_max);

// Deformed model from the X = x potential family member, mapped to the
// radial side with deformation m_q. One known state (the nodeless
// (1 + lambda x^2)^{-beta/2 lambda} line state, mapped), energy
// hbar^2 beta / 2m, assigned to the sector nearest m_q.
// Throws InvalidBeta unless beta > 0.
QuasiExactModel build_example_two(const PhysicalParameters& p, double beta,
                                  double m_q);

enum class SectorVerdict { Solvable, NotSolvable, Ambiguous };

// "solvable" / "not-solvable" / "ambiguous".
std::string verdict_name(SectorVerdict v);

// One known state evaluated in one sector.
struct StateCheck {
    int home_sector = 0;     // the sector the state actually solves
    int n_radial = 0;
    double energy = 0.0;
    double residual = 0.0;
    SectorVerdict verdict = SectorVerdict::Ambiguous;
};

struct SectorEntry {
    int m_g = 0;
    std::vector<double> oracle_eigenvalues;   // lowest few, ascending
    double oracle_convergence = 0.0;
    std::vector<StateCheck> states;
};

struct SectorReport {
    std::string model_tag;
    std::vector<SectorEntry> sectors;
};

// Sweeps the sectors: every known state's residual in every requested
// sector (verdict bands: < 1e-5 solvable, > 1e-2 not-solvable, else
// ambiguous) next to the oracle's lowest eigenvalues for that sector.
SectorReport sector_report(const QuasiExactModel& model,
                           const std::vector<int>& m_g_range,
                           const std::vector<double>& residual_grid,
                           const OracleConfig& oracle = {});

} // namespace curvos
