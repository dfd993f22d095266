#include "tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "curvos/errors.hpp"

namespace curvos::detail {

// Implicit-shift QL in the EISPACK tql1 family. e is used as scratch with a
// trailing zero; the shift is the eigenvalue of the trailing 2x2 closest to
// d[l] (via the g/r formulation).
std::vector<double> ql_eigenvalues(std::vector<double> d,
                                   std::vector<double> e) {
    const int n = static_cast<int>(d.size());
    if (n == 0)
        return {};
    if (e.size() + 1 != d.size())
        throw DomainError("ql_eigenvalues: e must have size n - 1");
    e.push_back(0.0);

    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            // Find a negligible subdiagonal element.
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd)
                    break;
            }
            if (m != l) {
                if (++iter > 50)
                    throw ConvergenceFailure(
                        "ql_eigenvalues: no convergence in 50 sweeps", l, iter);
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        // Recover from underflow: deflate and restart sweep.
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l)
                    continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

// Solve (T - lambda I) w = rhs by LDL-style elimination with floored pivots.
// Near-singularity is expected (lambda is an eigenvalue); growth lands in the
// eigenvector direction, which is the point of inverse iteration.
void shifted_solve(const std::vector<double>& d, const std::vector<double>& e,
                   double lambda, std::vector<double>& w) {
    const int n = static_cast<int>(d.size());
    const double tiny = 1e-280;
    std::vector<double> piv(n);
    piv[0] = d[0] - lambda;
    if (std::abs(piv[0]) < tiny)
        piv[0] = std::signbit(piv[0]) ? -tiny : tiny;
    for (int i = 1; i < n; ++i) {
        const double l = e[i - 1] / piv[i - 1];
        piv[i] = (d[i] - lambda) - l * e[i - 1];
        if (std::abs(piv[i]) < tiny)
            piv[i] = std::signbit(piv[i]) ? -tiny : tiny;
        w[i] -= l * w[i - 1];
    }
    w[n - 1] /= piv[n - 1];
    for (int i = n - 2; i >= 0; --i)
        w[i] = (w[i] - e[i] * w[i + 1]) / piv[i];
}

} // namespace

std::vector<double> inverse_iteration(const std::vector<double>& d,
                                      const std::vector<double>& e,
                                      double eigenvalue) {
    const int n = static_cast<int>(d.size());
    if (n == 0)
        return {};
    if (e.size() + 1 != d.size())
        throw DomainError("inverse_iteration: e must have size n - 1");

    std::mt19937 rng(987654321u);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v)
        x = uni(rng);

    for (int pass = 0; pass < 4; ++pass) {
        shifted_solve(d, e, eigenvalue, v);
        double norm = 0.0;
        for (double x : v)
            norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0.0)
            throw ConvergenceFailure("inverse_iteration: zero iterate", 0, pass);
        for (double& x : v)
            x /= norm;
    }

    int imax = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(v[i]) > std::abs(v[imax]))
            imax = i;
    if (v[imax] < 0.0)
        for (double& x : v)
            x = -x;
    return v;
}

} // namespace curvos::detail
