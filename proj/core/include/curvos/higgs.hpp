#pragma once

#include <functional>
#include <string>
#include <vector>

#include "curvos/model.hpp"
#include "curvos/special.hpp"

namespace curvos {

// A radial potential on r > 0. evaluate must be finite for r > r_floor;
// singular_at_origin marks a divergence as r -> 0 (centrifugal-like terms).
struct RadialPotential {
    std::function<double(double)> evaluate;
    bool singular_at_origin = false;
    double r_floor = 0.0;
};

// One bound state of a radial model: labels, energy from the shared formula,
// unnormalized closed-form wavefunction, and the tag of the potential it
// solves ("higgs-harmonic", "eg1", "eg2(beta=...)").
struct RadialState {
    QuantumNumbers quantum;
    double energy = 0.0;
    std::function<double(double)> wavefunction;
    std::string potential_tag;
};

// Applies the radial operator at one point with 5-point stencils:
//   -eps [ K^2 psi'' + (K (1 + 5 lambda r^2)/r) psi' + Z psi ] + V psi,
// K = 1 + lambda r^2,
// Z = 3 lambda - lambda m^2 + (15/4) lambda^2 r^2 - m^2 / r^2.
// Throws DomainError unless r - 2 step > 0.
double higgs_radial_apply(const RadialPotential& potential,
                          const PhysicalParameters& p, int m_g,
                          const std::function<double(double)>& psi,
                          double r, double step);

// Closed-form bound state of V = (1/2) m w^2 r^2 on the curved radial model:
//   psi(r) = r^{|m|} (1 + lambda r^2)^{-((|m| + 2)/2 + a/2)}
//            F(-N, N + |m| + 1 + a; |m| + 1; lambda r^2/(1 + lambda r^2)).
RadialState higgs_wavefunction(const PhysicalParameters& p, int n_radial,
                               int m_g);

// The r^2/2 * m w^2 potential as a RadialPotential (regular at the origin).
RadialPotential harmonic_radial_potential(const PhysicalParameters& p);

// Consistency of the angular reduction: applies the kinetic operator once
// with the angular block substituted analytically (+eps m^2 (lambda + 1/r^2))
// and once with that block folded into the zeroth-order coefficient, and
// returns the max absolute difference over the grid. Pure regrouping, so the
// result is rounding noise.
double angular_reduction_check(const PhysicalParameters& p, int m_g,
                               const RadialState& state,
                               const std::vector<double>& grid);

// <psi, H psi> / <psi, psi> with weight r, trapezoid on quadrature_grid,
// H applied pointwise via higgs_radial_apply. Stencil steps shrink near the
// origin (step = 0.03 min(r, 1/sqrt(lambda))) so singular-branch states keep
// their quotient. Throws DegenerateNorm when the norm is below 1e-300.
double rayleigh_quotient(const RadialPotential& potential,
                         const PhysicalParameters& p, int m_g,
                         const std::function<double(double)>& psi,
                         const std::vector<double>& quadrature_grid);

// Nodes r_i = tan(u_i)/sqrt(lambda) for n uniformly spaced u in [u_lo, u_hi].
std::vector<double> radial_grid_from_upsilon(double lambda, double u_lo,
                                             double u_hi, int n);

} // namespace curvos
