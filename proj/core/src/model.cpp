#include "curvos/model.hpp"

#include <cmath>

namespace curvos {

PhysicalParameters PhysicalParameters::create(double mass, double hbar,
                                              double omega, double lambda) {
    if (!(mass > 0.0))
        throw DomainError("PhysicalParameters: mass must be positive");
    if (!(hbar > 0.0))
        throw DomainError("PhysicalParameters: hbar must be positive");
    if (!(omega >= 0.0))
        throw DomainError("PhysicalParameters: omega must be nonnegative");
    if (!(lambda > 0.0))
        throw DomainError("PhysicalParameters: lambda must be positive");
    return PhysicalParameters{mass, hbar, omega, lambda};
}

PhysicalParameters canonical_parameters() {
    return PhysicalParameters{1.0, 1.0, 1.0, 1.0};
}

double derived_frequency(const PhysicalParameters& p) {
    // hypot avoids overflow and keeps the flat limit exact to rounding.
    return std::hypot(p.omega, p.hbar * p.lambda / (2.0 * p.mass));
}

double oscillator_strength(const PhysicalParameters& p) {
    return p.mass * derived_frequency(p) / (p.hbar * p.lambda);
}

QuantumNumbers make_quantum_numbers(int n_radial, double m_q, int m_g) {
    if (n_radial < 0)
        throw DomainError("QuantumNumbers: n_radial must be nonnegative");
    return QuantumNumbers{n_radial, m_q, m_g};
}

int principal_number(int n_radial, int m_angular) {
    if (n_radial < 0)
        throw DomainError("principal_number: n_radial must be nonnegative");
    return 2 * n_radial + std::abs(m_angular) + 1;
}

double energy_level(const PhysicalParameters& p, int n_radial, int m_angular) {
    const double n = static_cast<double>(principal_number(n_radial, m_angular));
    return p.hbar * derived_frequency(p) * n + p.epsilon() * p.lambda * n * n;
}

StructureFunction StructureFunction::cos_double_theta(double lambda) {
    if (!(lambda > 0.0))
        throw DomainError("StructureFunction: lambda must be positive");
    return StructureFunction{StructureKind::CosDoubleTheta, lambda};
}

StructureFunction StructureFunction::identity(double lambda) {
    if (!(lambda > 0.0))
        throw DomainError("StructureFunction: lambda must be positive");
    return StructureFunction{StructureKind::Identity, lambda};
}

StructureValues StructureFunction::evaluate(double x) const {
    if (kind == StructureKind::Identity)
        return StructureValues{x, 1.0, 0.0};

    // X = cos 2T with T = asinh(sqrt(lambda) x).
    // T' = sqrt(lambda/K), T'' = -lambda^{3/2} x K^{-3/2}, K = 1 + lambda x^2.
    const double sl = std::sqrt(lambda);
    const double K = 1.0 + lambda * x * x;
    const double T = std::asinh(sl * x);
    const double s2 = std::sin(2.0 * T);
    const double c2 = std::cos(2.0 * T);
    const double Tp = sl / std::sqrt(K);
    const double Tpp = -lambda * sl * x / (K * std::sqrt(K));
    const double dX = -2.0 * s2 * Tp;
    const double d2X = -4.0 * c2 * Tp * Tp - 2.0 * s2 * Tpp;
    return StructureValues{c2, dX, d2X};
}

double crs_potential(const CrsModelSpec& spec, const PhysicalParameters& p,
                     double x, double xprime_floor) {
    const StructureValues v = spec.structure.evaluate(x);
    if (std::abs(v.dX) < xprime_floor)
        throw SingularPoint("crs_potential: |X'(x)| below floor");
    const double K = 1.0 + p.lambda * x * x;
    const double u = spec.beta * v.X + spec.gamma;
    const double w = spec.a_coeff * v.X + spec.b_coeff;
    return p.epsilon() * (u * u + u * w) / (K * v.dX * v.dX) + spec.c_offset;
}

double check_structure_constraint(const StructureFunction& structure,
                                  double a_coeff, double b_coeff,
                                  const std::vector<double>& probe_grid) {
    double worst = 0.0;
    for (double x : probe_grid) {
        const StructureValues v = structure.evaluate(x);
        const double K = 1.0 + structure.lambda * x * x;
        const double lhs = K * v.d2X + structure.lambda * x * v.dX;
        const double rhs = a_coeff * v.X + b_coeff;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

} // namespace curvos
