#pragma once

#include <stdexcept>
#include <string>

namespace curvos {

// Base for every failure the library reports. Catch this to handle any
// curvos error uniformly; catch the derived types to branch on cause.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A formula was evaluated where one of its factors degenerates
// (structure derivative below floor, separation factor at a zero of sin 2Y).
class SingularPoint : public Error {
public:
    using Error::Error;
};

// Terminating hypergeometric sum hit a zero denominator: c + k = 0 for
// some k strictly inside the summation range.
class PoleInC : public Error {
public:
    using Error::Error;
};

// Argument outside the interval on which the quantity is defined
// (coordinate outside the model's chart, stencil leaving the domain,
// invalid construction parameters).
class DomainError : public Error {
public:
    using Error::Error;
};

// A quadrature norm fell below the representable floor (1e-300), so a
// quotient against it would be meaningless.
class DegenerateNorm : public Error {
public:
    using Error::Error;
};

// Discretization request too small for the number of eigenvalues wanted.
class GridTooCoarse : public Error {
public:
    using Error::Error;
};

// Iterative eigen-solve exceeded its sweep budget. Carries the iteration
// count and the index it stalled on.
class ConvergenceFailure : public Error {
public:
    ConvergenceFailure(const std::string& what, int index, int iterations)
        : Error(what), index(index), iterations(iterations) {}
    int index;
    int iterations;
};

// build_example_two requires beta > 0.
class InvalidBeta : public Error {
public:
    using Error::Error;
};

} // namespace curvos
