#include "curvos/oracle.hpp"

#include <cmath>
#include <numbers>

#include "tridiag.hpp"

namespace curvos {

namespace {

void validate_config(const OracleConfig& c) {
    if (c.num_eigenvalues < 1)
        throw DomainError("OracleConfig: num_eigenvalues must be >= 1");
    if (c.grid_points < 100 || c.grid_points < 10 * c.num_eigenvalues)
        throw GridTooCoarse("OracleConfig: grid_points below minimum");
    const double quarter_pi = std::numbers::pi / 4.0;
    const double half_pi = std::numbers::pi / 2.0;
    if (!(c.upsilon_min > 0.0) || !(c.upsilon_min < quarter_pi))
        throw DomainError("OracleConfig: upsilon_min outside (0, pi/4)");
    if (!(c.upsilon_max > quarter_pi) || !(c.upsilon_max < half_pi))
        throw DomainError("OracleConfig: upsilon_max outside (pi/4, pi/2)");
}

bool zero_flux_left(const OracleConfig& c, int m_g) {
    if (c.left_boundary == LeftBoundary::ZeroFlux)
        return true;
    if (c.left_boundary == LeftBoundary::Auto)
        return m_g == 0;
    return false;
}

// Standard-problem reduction d_i = diag_i / w_i, e_i = off_i / sqrt(w_i w_{i+1}).
void reduce(const RadialEigenproblem& prob, std::vector<double>& d,
            std::vector<double>& e) {
    const std::size_t n = prob.diag.size();
    d.resize(n);
    e.resize(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = prob.diag[i] / prob.weight[i];
    for (std::size_t i = 0; i + 1 < n; ++i)
        e[i] = prob.off[i] / std::sqrt(prob.weight[i] * prob.weight[i + 1]);
}

} // namespace

RadialEigenproblem discretize(const RadialPotential& potential,
                              const PhysicalParameters& p, int m_g,
                              const OracleConfig& config) {
    validate_config(config);
    const int n = config.grid_points;
    const double sl = std::sqrt(p.lambda);
    const double lam = p.lambda;
    const double eps = p.epsilon();
    const double m2 = static_cast<double>(m_g) * static_cast<double>(m_g);

    // Nodes j = 0..n+1 including the two boundary nodes.
    const double ds = (config.upsilon_max - config.upsilon_min) / (n + 1.0);
    std::vector<double> r(n + 2);
    for (int j = 0; j <= n + 1; ++j)
        r[j] = std::tan(config.upsilon_min + ds * j) / sl;

    // Flux coefficients through the n+1 cell faces (midpoints of node pairs).
    auto pcoef = [lam](double rr) {
        const double K = 1.0 + lam * rr * rr;
        return rr * K * K;
    };
    std::vector<double> flux(n + 1);
    for (int j = 0; j <= n; ++j) {
        const double rm = 0.5 * (r[j] + r[j + 1]);
        flux[j] = eps * pcoef(rm) / (r[j + 1] - r[j]);
    }

    RadialEigenproblem prob;
    prob.potential = potential;
    prob.params = p;
    prob.m_g = m_g;
    prob.config = config;
    prob.r.resize(n);
    prob.diag.resize(n);
    prob.off.resize(n - 1);
    prob.weight.resize(n);

    for (int j = 1; j <= n; ++j) {
        const double rj = r[j];
        const double hj = 0.5 * (r[j + 1] - r[j - 1]);
        const double Z = 3.0 * lam - lam * m2 +
                         (15.0 / 4.0) * lam * lam * rj * rj - m2 / (rj * rj);
        const int i = j - 1;
        prob.r[i] = rj;
        prob.weight[i] = hj * rj;
        prob.diag[i] = flux[j - 1] + flux[j] +
                       hj * rj * (potential.evaluate(rj) - eps * Z);
        if (j < n)
            prob.off[i] = -flux[j];
    }
    if (zero_flux_left(config, m_g))
        prob.diag[0] -= flux[0];

    return prob;
}

OracleResult lowest_eigenvalues(const RadialEigenproblem& problem, int k) {
    if (k < 1 || k > problem.config.num_eigenvalues)
        throw DomainError("lowest_eigenvalues: k outside [1, num_eigenvalues]");

    std::vector<double> d, e;
    reduce(problem, d, e);
    std::vector<double> all = detail::ql_eigenvalues(d, e);

    OracleResult result;
    result.grid_spec = problem.config;
    result.eigenvalues.assign(all.begin(), all.begin() + k);

    // Re-solve at half resolution for the h^2 convergence estimate.
    OracleConfig half = problem.config;
    half.grid_points = std::max(100, problem.config.grid_points / 2);
    half.num_eigenvalues = 1;
    const RadialEigenproblem coarse =
        discretize(problem.potential, problem.params, problem.m_g, half);
    reduce(coarse, d, e);
    const std::vector<double> all2 = detail::ql_eigenvalues(d, e);
    result.convergence_estimate = std::abs(result.eigenvalues[0] - all2[0]);

    return result;
}

std::vector<double> lowest_eigenvector(const RadialEigenproblem& problem,
                                       double eigenvalue) {
    std::vector<double> d, e;
    reduce(problem, d, e);
    std::vector<double> y = detail::inverse_iteration(d, e, eigenvalue);

    // Undo the W^{1/2} scaling to recover wavefunction values.
    std::vector<double> psi(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        psi[i] = y[i] / std::sqrt(problem.weight[i]);

    std::size_t imax = 0;
    for (std::size_t i = 1; i < psi.size(); ++i)
        if (std::abs(psi[i]) > std::abs(psi[imax]))
            imax = i;
    const double scale = psi[imax];
    for (double& v : psi)
        v /= scale;
    return psi;
}

double residual_norm(const RadialPotential& potential,
                     const PhysicalParameters& p, int m_g,
                     const std::function<double(double)>& psi, double energy,
                     const std::vector<double>& grid) {
    if (grid.size() < 2)
        throw DomainError("residual_norm: grid needs >= 2 points");
    const double step = 1e-4 * (grid.back() - grid.front());
    double worst = 0.0;
    double denom = 0.0;
    for (double r : grid) {
        const double target = energy * psi(r);
        const double applied = higgs_radial_apply(potential, p, m_g, psi, r, step);
        worst = std::max(worst, std::abs(applied - target));
        denom = std::max(denom, std::abs(target));
    }
    if (!(denom > 1e-300))
        throw DegenerateNorm("residual_norm: reference magnitude underflows");
    return worst / denom;
}

double line_ground_energy(const std::function<double(double)>& potential,
                          double kinetic_coefficient, double half_width,
                          int points) {
    if (points < 3 || !(half_width > 0.0) || !(kinetic_coefficient > 0.0))
        throw DomainError("line_ground_energy: bad request");
    const double h = 2.0 * half_width / (points + 1.0);
    const double c = kinetic_coefficient / (h * h);
    std::vector<double> d(points), e(points - 1, -c);
    for (int j = 0; j < points; ++j) {
        const double x = -half_width + h * (j + 1.0);
        d[j] = 2.0 * c + potential(x);
    }
    return detail::ql_eigenvalues(std::move(d), std::move(e)).front();
}

} // namespace curvos
