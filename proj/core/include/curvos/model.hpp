#pragma once

#include <vector>

#include "curvos/errors.hpp"

namespace curvos {

// Shared physical inputs. epsilon() and derived_frequency() are the only
// derived quantities; everything downstream goes through them so the two
// dual models can never disagree on conventions.
struct PhysicalParameters {
    double mass = 1.0;
    double hbar = 1.0;
    double omega = 1.0;
    double lambda = 1.0;   // curvature, strictly positive

    // Throws DomainError unless mass > 0, hbar > 0, omega >= 0, lambda > 0.
    static PhysicalParameters create(double mass, double hbar, double omega,
                                     double lambda);

    double epsilon() const { return hbar * hbar / (2.0 * mass); }
};

// All four couplings equal to 1.
PhysicalParameters canonical_parameters();

// w' = sqrt(w^2 + hbar^2 lambda^2 / 4 m^2), the curvature-shifted frequency.
double derived_frequency(const PhysicalParameters& p);

// Dimensionless oscillator strength a = m w' / (hbar lambda).
double oscillator_strength(const PhysicalParameters& p);

// Labels for one bound state. n_radial counts radial nodes; m_q is the
// deformation parameter on the line side (integer values give analytic
// eigenstates, half-odd values are admitted by the potential family);
// m_g is the angular momentum on the radial side.
struct QuantumNumbers {
    int n_radial = 0;
    double m_q = 0.0;
    int m_g = 0;
};

// Throws DomainError when n_radial < 0.
QuantumNumbers make_quantum_numbers(int n_radial, double m_q, int m_g);

// Principal label n = 2N + |m| + 1 shared by both models.
int principal_number(int n_radial, int m_angular);

// E(N, m) = hbar w' n + epsilon lambda n^2 with n = 2N + |m| + 1.
// Single implementation; both models call it.
double energy_level(const PhysicalParameters& p, int n_radial, int m_angular);

// The deformation profile X(x) entering the solvable potential family.
// Two members: X = cos(2 asinh(sqrt(lambda) x)) and X = x.
enum class StructureKind { CosDoubleTheta, Identity };

struct StructureValues {
    double X;
    double dX;    // dX/dx
    double d2X;   // d2X/dx2
};

struct StructureFunction {
    StructureKind kind = StructureKind::Identity;
    double lambda = 1.0;

    static StructureFunction cos_double_theta(double lambda);
    static StructureFunction identity(double lambda);

    StructureValues evaluate(double x) const;
};

// One member of the solvable potential family:
//   V(x) = eps [ (beta X + gamma)^2 + (beta X + gamma)(A X + B) ] / (K X'^2) + C
// with K = 1 + lambda x^2, valid when the structure satisfies
//   K X'' + lambda x X' = A X + B.
struct CrsModelSpec {
    StructureFunction structure;
    double beta = 0.0;
    double gamma = 0.0;
    double a_coeff = 0.0;
    double b_coeff = 0.0;
    double c_offset = 0.0;
};

// Evaluates the family potential at x. Throws SingularPoint when
// |X'(x)| < xprime_floor.
double crs_potential(const CrsModelSpec& spec, const PhysicalParameters& p,
                     double x, double xprime_floor = 1e-12);

// Max over the probe grid of |K X'' + lambda x X' - (A X + B)|.
double check_structure_constraint(const StructureFunction& structure,
                                  double a_coeff, double b_coeff,
                                  const std::vector<double>& probe_grid);

} // namespace curvos
