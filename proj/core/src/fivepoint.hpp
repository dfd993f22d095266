#pragma once

#include <functional>

namespace curvos::detail {

// O(h^4) central stencils shared by the pointwise operator applications.

inline double d1_five_point(const std::function<double(double)>& f,
                            double x, double h) {
    return (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) /
           (12.0 * h);
}

inline double d2_five_point(const std::function<double(double)>& f,
                            double x, double h) {
    return (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) +
            16.0 * f(x - h) - f(x - 2.0 * h)) /
           (12.0 * h * h);
}

} // namespace curvos::detail
