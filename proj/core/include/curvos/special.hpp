#pragma once

#include "curvos/errors.hpp"

namespace curvos {

// Rising factorial (q)_k = q (q+1) ... (q+k-1); (q)_0 = 1.
// Throws DomainError when k < 0.
double pochhammer(double q, int k);

// Terminating Gauss series F(-n, b; c; z) = sum_{k=0}^{n} term_k, summed
// ascending with the term recurrence
//   term_{k+1} = term_k * (-n + k)(b + k) / ((c + k)(k + 1)) * z.
// Exact polynomial evaluation, no convergence question. Throws DomainError
// for n < 0 and PoleInC when c + k = 0 for some 0 <= k < n.
double gauss_2f1_terminating(int n, double b, double c, double z);

// The same polynomial packaged as a reusable evaluator.
struct TerminatingHypergeometric {
    int n_terms = 0;   // polynomial degree n
    double b = 0.0;
    double c = 1.0;

    double operator()(double z) const {
        return gauss_2f1_terminating(n_terms, b, c, z);
    }
};

} // namespace curvos
