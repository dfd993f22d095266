#pragma once

#include <functional>

#include "curvos/crs.hpp"
#include "curvos/higgs.hpp"
#include "curvos/model.hpp"

namespace curvos {

// The change of variables linking the line model (coordinate x, angle
// T = asinh(sqrt(lambda) x)) and the radial model (coordinate r, angle
// Y = arctan(sqrt(lambda) r)). The two angles are identified: T(x(r)) = Y(r).
struct CoordinateMap {
    double lambda = 1.0;

    double upsilon_of_r(double r) const;   // arctan(sqrt(lambda) r)
    double theta_of_x(double x) const;     // asinh(sqrt(lambda) x)
    double x_of_r(double r) const;         // sinh(arctan(sqrt(lambda) r))/sqrt(lambda)
    double r_of_x(double x) const;         // tan(asinh(sqrt(lambda) x))/sqrt(lambda)
};

// g(r) = |sin 2Y|^{-3/2} sin^2 Y, the ratio phi(x(r))/psi(r) between paired
// line and radial states. Vanishes like Y^{1/2} as r -> 0. Throws
// SingularPoint when |sin 2Y| < floor.
double separation_factor(const CoordinateMap& map, double r,
                         double floor = 1e-14);

// psi(r) = csc^2(Y) |sin 2Y|^{3/2} phi(x(r)), the inverse of dividing by g.
std::function<double(double)>
map_wavefunction_to_radial(const std::function<double(double)>& phi,
                           const CoordinateMap& map);

// Radial image of a line potential:
//   V_rad(r) = V_line(x(r)) + (lambda hbar^2 / 8m)(1 + (1 - 4 m_q^2) csc^2 Y).
// The view overload adds the csc^2 coefficients as plain reals first, so a
// matching m_q cancels the singular part exactly and the image is evaluated
// entirely in the shared angle. singular_at_origin is set iff a csc^2 term
// survives. The callable overload composes through x(r) and uses the
// coefficient test 1 - 4 m_q^2 != 0 for the flag.
RadialPotential map_potential_to_radial(const CrsPotentialView& view,
                                        const PhysicalParameters& p,
                                        double m_q, const CoordinateMap& map);
RadialPotential map_potential_to_radial(
    const std::function<double(double)>& crs_potential,
    const PhysicalParameters& p, double m_q, const CoordinateMap& map);

} // namespace curvos
