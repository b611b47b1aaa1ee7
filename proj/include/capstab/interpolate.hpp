#pragma once

#include "capstab/polar_grid.hpp"

namespace capstab {

/// Bicubic (tensor Lagrange) interpolation of a grid field at arbitrary disk
/// points. The radial index space is uniform through the boundary ring, so a
/// single cubic stencil applies everywhere; stencils reaching below the
/// innermost ring use the opposite ray, stencils reaching past the boundary
/// ring are clamped one-sided.
class PolarInterpolator {
  public:
    explicit PolarInterpolator(const GridField& f) : f_(&f) {}

    /// Value at (x, y) with |(x, y)| <= 1 (a small tolerance is clamped).
    double operator()(double x, double y) const;

  private:
    double ring_value(int ring, double theta) const;
    const GridField* f_;
};

}  // namespace capstab
