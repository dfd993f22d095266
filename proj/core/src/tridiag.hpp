#pragma once

#include <vector>

namespace curvos::detail {

// Eigenvalues of a symmetric tridiagonal matrix (diagonal d, off-diagonal e,
// e.size() == d.size() - 1), implicit-shift QL, ascending. Throws
// ConvergenceFailure after 50 sweeps on one element.
std::vector<double> ql_eigenvalues(std::vector<double> d, std::vector<double> e);

// Eigenvector for a known eigenvalue by inverse iteration with a fixed-seed
// start vector; returned with unit Euclidean norm and the largest-magnitude
// component positive.
std::vector<double> inverse_iteration(const std::vector<double>& d,
                                      const std::vector<double>& e,
                                      double eigenvalue);

} // namespace curvos::detail
