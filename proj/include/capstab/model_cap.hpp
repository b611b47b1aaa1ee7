#pragma once

#include <array>

#include "capstab/polar_grid.hpp"

namespace capstab {

/// Closed-form data of the model spherical cap with boundary geodesic
/// curvature c: the cap of radius arccot(c) in the unit round sphere,
/// realized on the disk by the factor rho_c.
struct CapParams {
    double c = 0.0;
    double r_c = 1.0;             // sqrt(1+c^2) - c, the stereographic cap radius
    double cap_radius = 0.0;      // arccot(c)
    double boundary_length = 0.0; // 2*pi/sqrt(1+c^2)
    double area = 0.0;            // 2*pi*(1 - c/sqrt(1+c^2))

    static CapParams make(double c);
};

/// arccot with range (0, pi/2] for positive arguments, arccot(0) = pi/2,
/// extended continuously by arccot(inf) = 0.
double arccot(double x);

/// The model factor value rho_c(x) = log(2 R_c / (1 + |R_c x|^2)).
double rho_c_value(double c, double x, double y);

/// Samples rho_c on the grid. Boundary values equal -log(sqrt(1+c^2))
/// identically.
GridField model_factor(double c, const PolarGrid& grid);

/// Lower bound for the intrinsic inradius of a convex spherical domain with
/// boundary curvature >= c > 0 and boundary length L:
///   arccot(c) - arccot(c * sec(L*sqrt(1+c^2)/4)).
/// The extremal limit L = 2*pi/sqrt(1+c^2) returns arccot(c) exactly.
double inradius_lower_bound(double c, double L);

/// Stereographic projection from the north pole and its inverse.
/// (x, y, z) on the unit sphere maps to (x, y)/(1 - z).
std::array<double, 2> stereographic(const std::array<double, 3>& p);
std::array<double, 3> stereographic_inverse(const std::array<double, 2>& q);

/// Radius of the stereographic image of the inball guaranteed by an inradius
/// defect psi: tan(alpha/2) with alpha = 2*arccot(c+psi) - arccot(c).
/// Increases to R_c as psi decreases to 0.
double stereo_inball_radius(double c, double psi);

}  // namespace capstab
