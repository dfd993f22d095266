#include "curvos/transform.hpp"

#include <cmath>

namespace curvos {

double CoordinateMap::upsilon_of_r(double r) const {
    return std::atan(std::sqrt(lambda) * r);
}

double CoordinateMap::theta_of_x(double x) const {
    return std::asinh(std::sqrt(lambda) * x);
}

double CoordinateMap::x_of_r(double r) const {
    const double sl = std::sqrt(lambda);
    return std::sinh(std::atan(sl * r)) / sl;
}

double CoordinateMap::r_of_x(double x) const {
    const double sl = std::sqrt(lambda);
    return std::tan(std::asinh(sl * x)) / sl;
}

double separation_factor(const CoordinateMap& map, double r, double floor) {
    const double Y = map.upsilon_of_r(r);
    const double s2 = std::sin(2.0 * Y);
    if (std::abs(s2) < floor)
        throw SingularPoint("separation_factor: sin 2Y below floor");
    const double s = std::sin(Y);
    return std::pow(std::abs(s2), -1.5) * s * s;
}

std::function<double(double)>
map_wavefunction_to_radial(const std::function<double(double)>& phi,
                           const CoordinateMap& map) {
    const CoordinateMap m = map;
    return [m, phi](double r) {
        const double Y = m.upsilon_of_r(r);
        const double s = std::sin(Y);
        const double s2 = std::sin(2.0 * Y);
        return std::pow(std::abs(s2), 1.5) / (s * s) * phi(m.x_of_r(r));
    };
}

RadialPotential map_potential_to_radial(const CrsPotentialView& view,
                                        const PhysicalParameters& p,
                                        double m_q, const CoordinateMap& map) {
    const double quarter = p.lambda * p.hbar * p.hbar / (8.0 * p.mass);
    const double correction = quarter * (1.0 - 4.0 * m_q * m_q);

    if (view.regular_of_theta) {
        // Net singular coefficient; exact zero when the view's m_q matches.
        const double net = view.csc2_coefficient + correction;
        const CoordinateMap m = map;
        const auto regular = view.regular_of_theta;
        auto eval = [m, regular, quarter, net](double r) {
            const double Y = m.upsilon_of_r(r);
            double v = regular(Y) + quarter;
            if (net != 0.0) {
                const double s = std::sin(Y);
                v += net / (s * s);
            }
            return v;
        };
        return RadialPotential{eval, net != 0.0, 0.0};
    }

    const CoordinateMap m = map;
    const auto of_x = view.of_x;
    auto eval = [m, of_x, quarter, correction](double r) {
        const double Y = m.upsilon_of_r(r);
        const double s = std::sin(Y);
        return of_x(m.x_of_r(r)) + quarter + correction / (s * s);
    };
    return RadialPotential{eval, correction != 0.0, 0.0};
}

RadialPotential map_potential_to_radial(
    const std::function<double(double)>& crs_potential,
    const PhysicalParameters& p, double m_q, const CoordinateMap& map) {
    CrsPotentialView view;
    view.of_x = crs_potential;
    return map_potential_to_radial(view, p, m_q, map);
}

} // namespace curvos
