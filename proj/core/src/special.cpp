#include "curvos/special.hpp"

namespace curvos {

double pochhammer(double q, int k) {
    if (k < 0)
        throw DomainError("pochhammer: k must be nonnegative");
    double acc = 1.0;
    for (int i = 0; i < k; ++i)
        acc *= q + static_cast<double>(i);
    return acc;
}

double gauss_2f1_terminating(int n, double b, double c, double z) {
    if (n < 0)
        throw DomainError("gauss_2f1_terminating: n must be nonnegative");
    for (int k = 0; k < n; ++k) {
        if (c + static_cast<double>(k) == 0.0)
            throw PoleInC("gauss_2f1_terminating: c + k = 0 inside series");
    }
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        term *= (-static_cast<double>(n) + kd) * (b + kd) /
                ((c + kd) * (kd + 1.0)) * z;
        sum += term;
    }
    return sum;
}

} // namespace curvos
