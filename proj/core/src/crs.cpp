#include "curvos/crs.hpp"

#include <cmath>
#include <numbers>

#include "fivepoint.hpp"

namespace curvos {

namespace {

double model_interval_end(const PhysicalParameters& p) {
    return std::sinh(std::numbers::pi / 2.0) / std::sqrt(p.lambda);
}

} // namespace

CrsModelSpec build_harmonic_crs_spec(const PhysicalParameters& p, double m_q) {
    const double sigma = 2.0 * p.mass * derived_frequency(p) / p.hbar;
    CrsModelSpec spec;
    spec.structure = StructureFunction::cos_double_theta(p.lambda);
    spec.beta = 2.0 * p.lambda * (m_q + 1.0) + sigma;
    spec.gamma = 2.0 * p.lambda * m_q - sigma;
    spec.a_coeff = -4.0 * p.lambda;
    spec.b_coeff = 0.0;
    spec.c_offset = p.epsilon() * (p.lambda * (m_q * m_q - 1.0) + m_q * sigma);
    return spec;
}

double crs_harmonic_potential(const PhysicalParameters& p, double m_q, double x) {
    if (!(x > 0.0) || !(x < model_interval_end(p)))
        throw DomainError("crs_harmonic_potential: x outside (0, sinh(pi/2)/sqrt(lambda))");
    const double T = std::asinh(std::sqrt(p.lambda) * x);
    const double t = std::tan(T);
    const double s = std::sin(T);
    const double quarter = p.lambda * p.hbar * p.hbar / (8.0 * p.mass);
    return 0.5 * p.mass * p.omega * p.omega * t * t / p.lambda -
           quarter * (1.0 + (1.0 - 4.0 * m_q * m_q) / (s * s));
}

double apply_crs_operator(const std::function<double(double)>& potential,
                          const PhysicalParameters& p,
                          const std::function<double(double)>& psi,
                          double x, double step, double x_lo, double x_hi) {
    if (x_hi < 0.0)
        x_hi = model_interval_end(p);
    if (!(step > 0.0))
        throw DomainError("apply_crs_operator: step must be positive");
    if (!(x - 2.0 * step > x_lo) || !(x + 2.0 * step < x_hi))
        throw DomainError("apply_crs_operator: stencil leaves the domain");
    const double K = 1.0 + p.lambda * x * x;
    const double d1 = detail::d1_five_point(psi, x, step);
    const double d2 = detail::d2_five_point(psi, x, step);
    return p.epsilon() * (-K * d2 - p.lambda * x * d1) + potential(x) * psi(x);
}

CrsState crs_eigenfunction(const PhysicalParameters& p, int n_radial, int m_q) {
    const QuantumNumbers q = make_quantum_numbers(n_radial, m_q, m_q);
    const double a = oscillator_strength(p);
    const double am = std::abs(static_cast<double>(m_q));
    const double lam = p.lambda;
    const TerminatingHypergeometric F{n_radial, n_radial + am + 1.0 + a, am + 1.0};

    auto phi = [a, am, lam, F](double x) {
        const double T = std::asinh(std::sqrt(lam) * x);
        const double s = std::sin(T);
        const double s2 = std::sin(2.0 * T);
        return std::pow(std::abs(s2), -1.5) * s * s *
               std::pow(std::tan(T) / std::sqrt(lam), am) *
               std::pow(std::cos(T), am + 2.0 + a) * F(s * s);
    };

    return CrsState{q, energy_level(p, n_radial, m_q), phi, 0.0,
                    model_interval_end(p)};
}

CrsPotentialView crs_harmonic_potential_view(const PhysicalParameters& p,
                                             double m_q) {
    const double quarter = p.lambda * p.hbar * p.hbar / (8.0 * p.mass);
    const double spring = 0.5 * p.mass * p.omega * p.omega / p.lambda;
    CrsPotentialView view;
    view.csc2_coefficient = -quarter * (1.0 - 4.0 * m_q * m_q);
    view.regular_of_theta = [spring, quarter](double T) {
        const double t = std::tan(T);
        return spring * t * t - quarter;
    };
    PhysicalParameters pc = p;
    view.of_x = [pc, m_q](double x) { return crs_harmonic_potential(pc, m_q, x); };
    return view;
}

CrsPotentialView crs_identity_potential_view(const PhysicalParameters& p,
                                             double beta) {
    const double strength = p.epsilon() * beta * (beta + p.lambda);
    const double lam = p.lambda;
    CrsPotentialView view;
    view.csc2_coefficient = 0.0;
    view.regular_of_theta = [strength, lam](double T) {
        const double th = std::tanh(T);
        return strength / lam * th * th;
    };
    view.of_x = [strength, lam](double x) {
        return strength * x * x / (1.0 + lam * x * x);
    };
    return view;
}

} // namespace curvos
