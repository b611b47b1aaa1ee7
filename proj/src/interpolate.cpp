#include "capstab/interpolate.hpp"

#include <algorithm>
#include <cmath>

namespace capstab {

namespace {

// Lagrange cubic through equally spaced samples y[0..3] at offsets
// {-1, 0, 1, 2}, evaluated at t in index units relative to y[1].
double cubic(const double y[4], double t) {
    const double tm = t + 1.0, t0 = t, t1 = t - 1.0, t2 = t - 2.0;
    return y[0] * (t0 * t1 * t2) / -6.0 + y[1] * (tm * t1 * t2) / 2.0 +
           y[2] * (tm * t0 * t2) / -2.0 + y[3] * (tm * t0 * t1) / 6.0;
}

}  // namespace

double PolarInterpolator::ring_value(int ring, double theta) const {
    const PolarGrid& g = f_->grid;
    // Signed ring index m < 0 refers to the opposite ray: ring (-1 - m) at
    // theta + pi.
    if (ring < 0) {
        ring = -1 - ring;
        theta += M_PI;
    }
    const double u = theta / g.htheta;
    const int j0 = static_cast<int>(std::floor(u));
    const double t = u - j0;
    double y[4];
    for (int s = 0; s < 4; ++s) y[s] = f_->at(ring, g.wrap(j0 - 1 + s));
    return cubic(y, t);
}

double PolarInterpolator::operator()(double x, double y) const {
    const PolarGrid& g = f_->grid;
    double r = std::hypot(x, y);
    if (r > 1.0) {
        if (r > 1.0 + 1e-9) throw std::invalid_argument("PolarInterpolator: point outside disk");
        r = 1.0;
    }
    const double theta = std::atan2(y, x);
    // Uniform radial index space: ring m sits at r = (m + 1/2) hr, with
    // m = nr the boundary ring.
    const double s = r / g.hr - 0.5;
    int base = static_cast<int>(std::floor(s));
    base = std::min(base, g.nr - 2);  // clamp so the stencil ends at the boundary ring
    const double t = s - base;
    double ry[4];
    for (int k = 0; k < 4; ++k) ry[k] = ring_value(base - 1 + k, theta);
    return cubic(ry, t);
}

}  // namespace capstab
