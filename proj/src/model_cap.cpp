#include "capstab/model_cap.hpp"

#include <cmath>
#include <stdexcept>

namespace capstab {

double arccot(double x) {
    if (std::isinf(x)) return x > 0 ? 0.0 : M_PI;
    if (x == 0.0) return M_PI_2;
    if (x > 0.0) return std::atan(1.0 / x);
    return M_PI + std::atan(1.0 / x);
}

CapParams CapParams::make(double c) {
    if (c < 0.0 || !std::isfinite(c)) throw std::invalid_argument("CapParams: c must be >= 0");
    CapParams p;
    p.c = c;
    const double s = std::sqrt(1.0 + c * c);
    p.r_c = s - c;
    p.cap_radius = arccot(c);
    p.boundary_length = 2.0 * M_PI / s;
    p.area = 2.0 * M_PI * (1.0 - c / s);
    return p;
}

double rho_c_value(double c, double x, double y) {
    const double rc = std::sqrt(1.0 + c * c) - c;
    const double q = rc * rc * (x * x + y * y);
    return std::log(2.0 * rc / (1.0 + q));
}

GridField model_factor(double c, const PolarGrid& grid) {
    if (c < 0.0 || !std::isfinite(c)) throw std::invalid_argument("model_factor: c must be >= 0");
    const double rc = std::sqrt(1.0 + c * c) - c;
    return make_radial_field(grid, [rc](double r) {
        return std::log(2.0 * rc / (1.0 + rc * rc * r * r));
    });
}

double inradius_lower_bound(double c, double L) {
    if (!(c > 0.0)) throw std::invalid_argument("inradius_lower_bound: c must be > 0");
    const double s = std::sqrt(1.0 + c * c);
    const double extremal = 2.0 * M_PI / s;
    if (!(L > 0.0) || L > extremal * (1.0 + 1e-12))
        throw std::invalid_argument("inradius_lower_bound: L outside (0, 2*pi/sqrt(1+c^2)]");
    const double arg = L * s / 4.0;
    // The extremal limit hits sec(pi/2); return the analytic limit arccot(c)
    // so sweeps need no special casing.
    if (arg >= M_PI_2 * (1.0 - 1e-14)) return arccot(c);
    return arccot(c) - arccot(c / std::cos(arg));
}

std::array<double, 2> stereographic(const std::array<double, 3>& p) {
    const double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    if (std::abs(n - 1.0) > 1e-9)
        throw std::invalid_argument("stereographic: input not on the unit sphere");
    if (1.0 - p[2] < 1e-12) throw std::invalid_argument("stereographic: north pole");
    return {p[0] / (1.0 - p[2]), p[1] / (1.0 - p[2])};
}

std::array<double, 3> stereographic_inverse(const std::array<double, 2>& q) {
    const double s = q[0] * q[0] + q[1] * q[1];
    return {2.0 * q[0] / (1.0 + s), 2.0 * q[1] / (1.0 + s), (s - 1.0) / (1.0 + s)};
}

double stereo_inball_radius(double c, double psi) {
    if (!(c > 0.0)) throw std::invalid_argument("stereo_inball_radius: c must be > 0");
    if (psi < 0.0) throw std::invalid_argument("stereo_inball_radius: psi must be >= 0");
    const double alpha = 2.0 * arccot(c + psi) - arccot(c);
    if (!(alpha > 0.0) || !(alpha < M_PI))
        throw std::invalid_argument("stereo_inball_radius: angle outside (0, pi)");
    return std::tan(0.5 * alpha);
}

}  // namespace capstab
