#pragma once

#include <functional>
#include <vector>

#include "curvos/higgs.hpp"
#include "curvos/model.hpp"

namespace curvos {

// Boundary handling at the inner edge of the radial grid. Auto applies a
// zero-flux face for the m_g = 0 sector (the only sector whose states stay
// finite at the origin) and a Dirichlet node otherwise.
enum class LeftBoundary { Auto, Dirichlet, ZeroFlux };

// Discretization request. Angles are in the compact coordinate
// Y = arctan(sqrt(lambda) r); the grid nodes are r_j = tan(Y_j)/sqrt(lambda)
// for uniformly spaced Y. Margins must satisfy
// 0 < upsilon_min < pi/4 < upsilon_max < pi/2.
struct OracleConfig {
    int grid_points = 2000;
    double upsilon_min = 2e-4;
    double upsilon_max = 1.5697;
    int num_eigenvalues = 5;
    LeftBoundary left_boundary = LeftBoundary::Auto;
};

// Discretized radial problem: flux-form finite volumes on the nonuniform
// grid, row-scaled so that A is symmetric tridiagonal and the weights are
// the cell masses h_j r_j. Generalized problem A y = E W y.
struct RadialEigenproblem {
    RadialPotential potential;
    PhysicalParameters params;
    int m_g = 0;
    OracleConfig config;
    std::vector<double> r;        // interior nodes
    std::vector<double> diag;     // A diagonal
    std::vector<double> off;      // A superdiagonal (size n - 1)
    std::vector<double> weight;   // W diagonal, h_j r_j
};

// Builds the finite-volume matrices. Throws GridTooCoarse when grid_points
// < 100 or < 10 * num_eigenvalues, DomainError for margin violations.
RadialEigenproblem discretize(const RadialPotential& potential,
                              const PhysicalParameters& p, int m_g,
                              const OracleConfig& config);

struct OracleResult {
    std::vector<double> eigenvalues;      // ascending
    OracleConfig grid_spec;               // echo of the request
    double convergence_estimate = 0.0;    // |E0(n) - E0(n/2)|
};

// Lowest k eigenvalues of the reduced standard problem
// W^{-1/2} A W^{-1/2}, solved with the in-repo QL iteration. Throws
// DomainError when k < 1 or k > config.num_eigenvalues.
OracleResult lowest_eigenvalues(const RadialEigenproblem& problem, int k);

// Eigenvector for one computed eigenvalue, transformed back to wavefunction
// values on problem.r and scaled to max |psi| = 1 with positive peak.
std::vector<double> lowest_eigenvector(const RadialEigenproblem& problem,
                                       double eigenvalue);

// max_j |(H psi)(r_j) - E psi(r_j)| / max_j |E psi(r_j)| with the pointwise
// operator and stencil width 1e-4 times the grid extent. Throws
// DegenerateNorm when the denominator underflows.
double residual_norm(const RadialPotential& potential,
                     const PhysicalParameters& p, int m_g,
                     const std::function<double(double)>& psi, double energy,
                     const std::vector<double>& grid);

// Ground energy of -c u'' + V u on [-L, L] with Dirichlet walls (uniform
// grid, `points` interior nodes). Reference for interval-restricted models
// whose potential extends smoothly to the whole line.
double line_ground_energy(const std::function<double(double)>& potential,
                          double kinetic_coefficient, double half_width,
                          int points);

} // namespace curvos
