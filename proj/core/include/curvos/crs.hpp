#pragma once

#include <functional>

#include "curvos/model.hpp"
#include "curvos/special.hpp"

namespace curvos {

// One analytic bound state of a line model. The wavefunction is the closed
// form, unnormalized; domain is the open interval (x_lo, x_hi) on which the
// model lives, x_hi = sinh(pi/2)/sqrt(lambda).
struct CrsState {
    QuantumNumbers quantum;
    double energy = 0.0;
    std::function<double(double)> wavefunction;
    double x_lo = 0.0;
    double x_hi = 0.0;
};

// Family coefficients that make the deformed oscillator:
//   X = cos 2T,  beta = 2 lambda (m_q + 1) + sigma,  gamma = 2 lambda m_q - sigma,
//   A = -4 lambda, B = 0, C = eps (lambda (m_q^2 - 1) + m_q sigma),
// with sigma = 2 m w' / hbar.
CrsModelSpec build_harmonic_crs_spec(const PhysicalParameters& p, double m_q);

// The same potential in closed form,
//   V(x) = (1/2) m w^2 tan^2(T)/lambda - (lambda hbar^2 / 8m)(1 + (1 - 4 m_q^2) csc^2 T),
// T = asinh(sqrt(lambda) x). Throws DomainError outside (0, sinh(pi/2)/sqrt(lambda)).
double crs_harmonic_potential(const PhysicalParameters& p, double m_q, double x);

// Applies eps(-(1 + lambda x^2) psi'' - lambda x psi') + V psi at one point
// using 5-point stencils of width `step`. Throws DomainError when the stencil
// leaves (x_lo, x_hi); defaults cover the model interval.
double apply_crs_operator(const std::function<double(double)>& potential,
                          const PhysicalParameters& p,
                          const std::function<double(double)>& psi,
                          double x, double step,
                          double x_lo = 0.0, double x_hi = -1.0);

// Closed-form eigenstate of the deformed oscillator, integer m_q:
//   phi(x) = |sin 2T|^{-3/2} sin^2 T (tan T / sqrt(lambda))^{|m_q|}
//            (cos T)^{|m_q| + 2 + a} F(-N, N + |m_q| + 1 + a; |m_q| + 1; sin^2 T)
// with a = m w'/(hbar lambda). Energy comes from energy_level.
CrsState crs_eigenfunction(const PhysicalParameters& p, int n_radial, int m_q);

// A line potential together with its angle-variable structure. The full
// potential is regular_of_theta(T) + csc2_coefficient / sin^2 T; keeping the
// singular coefficient as a number lets the radial image cancel it exactly
// instead of to rounding. of_x is the same potential as a plain callable.
// regular_of_theta may be empty, in which case only of_x is available.
struct CrsPotentialView {
    std::function<double(double)> of_x;
    std::function<double(double)> regular_of_theta;
    double csc2_coefficient = 0.0;
};

// View of crs_harmonic_potential: regular part (1/2) m w^2 tan^2(T)/lambda
// - lambda hbar^2/8m, singular coefficient -(lambda hbar^2/8m)(1 - 4 m_q^2).
CrsPotentialView crs_harmonic_potential_view(const PhysicalParameters& p,
                                             double m_q);

// View of the X = x family member with couplings (beta, gamma=0, A=lambda,
// B=0, C=0): V(x) = eps beta (beta + lambda) x^2 / (1 + lambda x^2), whose
// angle form is (eps beta (beta + lambda)/lambda) tanh^2 T. No singular part.
CrsPotentialView crs_identity_potential_view(const PhysicalParameters& p,
                                             double beta);

} // namespace curvos
