#include "curvos/higgs.hpp"

#include <cmath>

#include "fivepoint.hpp"

namespace curvos {

namespace {

// Kinetic + centrifugal part of the radial operator at r, derivatives given.
double kinetic_folded(const PhysicalParameters& p, int m_g, double r,
                      double psi0, double d1, double d2) {
    const double lam = p.lambda;
    const double K = 1.0 + lam * r * r;
    const double m2 = static_cast<double>(m_g) * static_cast<double>(m_g);
    const double Z = 3.0 * lam - lam * m2 + (15.0 / 4.0) * lam * lam * r * r -
                     m2 / (r * r);
    return -p.epsilon() *
           (K * K * d2 + K * (1.0 + 5.0 * lam * r * r) / r * d1 + Z * psi0);
}

// Same operator with the angular block kept as a separate analytic term.
double kinetic_split(const PhysicalParameters& p, int m_g, double r,
                     double psi0, double d1, double d2) {
    const double lam = p.lambda;
    const double K = 1.0 + lam * r * r;
    const double m2 = static_cast<double>(m_g) * static_cast<double>(m_g);
    const double Z0 = 3.0 * lam + (15.0 / 4.0) * lam * lam * r * r;
    return -p.epsilon() *
               (K * K * d2 + K * (1.0 + 5.0 * lam * r * r) / r * d1 + Z0 * psi0) +
           p.epsilon() * m2 * (lam + 1.0 / (r * r)) * psi0;
}

} // namespace

double higgs_radial_apply(const RadialPotential& potential,
                          const PhysicalParameters& p, int m_g,
                          const std::function<double(double)>& psi,
                          double r, double step) {
    if (!(step > 0.0))
        throw DomainError("higgs_radial_apply: step must be positive");
    if (!(r - 2.0 * step > 0.0))
        throw DomainError("higgs_radial_apply: stencil reaches r <= 0");
    const double d1 = detail::d1_five_point(psi, r, step);
    const double d2 = detail::d2_five_point(psi, r, step);
    return kinetic_folded(p, m_g, r, psi(r), d1, d2) +
           potential.evaluate(r) * psi(r);
}

RadialState higgs_wavefunction(const PhysicalParameters& p, int n_radial,
                               int m_g) {
    const QuantumNumbers q = make_quantum_numbers(n_radial, 0.0, m_g);
    const double a = oscillator_strength(p);
    const double am = std::abs(static_cast<double>(m_g));
    const double lam = p.lambda;
    const TerminatingHypergeometric F{n_radial, n_radial + am + 1.0 + a, am + 1.0};

    auto psi = [a, am, lam, F](double r) {
        const double K = 1.0 + lam * r * r;
        return std::pow(r, am) * std::pow(1.0 / K, (am + 2.0) / 2.0 + a / 2.0) *
               F(lam * r * r / K);
    };

    return RadialState{q, energy_level(p, n_radial, m_g), psi, "higgs-harmonic"};
}

RadialPotential harmonic_radial_potential(const PhysicalParameters& p) {
    const double k = 0.5 * p.mass * p.omega * p.omega;
    return RadialPotential{[k](double r) { return k * r * r; }, false, 0.0};
}

double angular_reduction_check(const PhysicalParameters& p, int m_g,
                               const RadialState& state,
                               const std::vector<double>& grid) {
    if (grid.size() < 2)
        throw DomainError("angular_reduction_check: grid needs >= 2 points");
    const double step = 1e-4 * (grid.back() - grid.front());
    double worst = 0.0;
    for (double r : grid) {
        if (!(r - 2.0 * step > 0.0))
            throw DomainError("angular_reduction_check: stencil reaches r <= 0");
        const double d1 = detail::d1_five_point(state.wavefunction, r, step);
        const double d2 = detail::d2_five_point(state.wavefunction, r, step);
        const double psi0 = state.wavefunction(r);
        const double diff = kinetic_split(p, m_g, r, psi0, d1, d2) -
                            kinetic_folded(p, m_g, r, psi0, d1, d2);
        worst = std::max(worst, std::abs(diff));
    }
    return worst;
}

double rayleigh_quotient(const RadialPotential& potential,
                         const PhysicalParameters& p, int m_g,
                         const std::function<double(double)>& psi,
                         const std::vector<double>& quadrature_grid) {
    const std::size_t n = quadrature_grid.size();
    if (n < 3)
        throw DomainError("rayleigh_quotient: grid needs >= 3 points");
    const double step_cap = 1.0 / std::sqrt(p.lambda);

    std::vector<double> num(n), den(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = quadrature_grid[i];
        const double step = 0.03 * std::min(r, step_cap);
        const double v = psi(r);
        num[i] = v * higgs_radial_apply(potential, p, m_g, psi, r, step) * r;
        den[i] = v * v * r;
    }

    double inum = 0.0, iden = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = quadrature_grid[i + 1] - quadrature_grid[i];
        inum += 0.5 * h * (num[i] + num[i + 1]);
        iden += 0.5 * h * (den[i] + den[i + 1]);
    }
    if (!(std::abs(iden) > 1e-300))
        throw DegenerateNorm("rayleigh_quotient: norm below 1e-300");
    return inum / iden;
}

std::vector<double> radial_grid_from_upsilon(double lambda, double u_lo,
                                             double u_hi, int n) {
    if (n < 2 || !(u_hi > u_lo))
        throw DomainError("radial_grid_from_upsilon: bad grid request");
    const double sl = std::sqrt(lambda);
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) {
        const double u = u_lo + (u_hi - u_lo) * i / (n - 1.0);
        r[i] = std::tan(u) / sl;
    }
    return r;
}

} // namespace curvos
