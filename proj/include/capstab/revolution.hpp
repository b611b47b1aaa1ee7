#pragma once

#include <vector>

#include "capstab/gh.hpp"

namespace capstab {

/// Rotationally symmetric metric dr^2 + phi(r)^2 dtheta^2 on the sphere,
/// stored as uniform samples of the warping profile on [0, r_max].
/// Smooth poles require phi(0) = phi(r_max) = 0 with slopes +1 / -1.
struct WarpProfile {
    double r_max = 0.0;
    std::vector<double> samples;   // uniform, including both endpoints
    int k = 1;                     // football order used to build it (1 = round)
    double s = 0.0;                // smoothing width parameter
    double rescale_factor = 1.0;
    double min_curvature = 1.0;    // construction minimum of K, post-rescale
    double dphi0 = 1.0;            // endpoint slopes
    double dphi1 = -1.0;

    int count() const { return static_cast<int>(samples.size()); }
    double spacing() const { return r_max / (count() - 1); }

    /// Clamped-spline evaluation of phi and phi''.
    double phi(double r) const;
    double phi_second(double r) const;

    void validate() const;
};

/// K = -phi''/phi on the staggered interior grid (midpoints between samples).
struct CurvatureProfile {
    std::vector<double> r;
    std::vector<double> k;
    double min_k = 0.0;
};

CurvatureProfile curvature_profile(const WarpProfile& w);

/// Round sphere profile phi = sin(r) on [0, pi].
WarpProfile round_sphere_profile(int samples = 2048);

/// Smoothed Z_k football: sin(r)/k away from the poles, spherical caps of
/// radius lambda glued in with C^1 matching at meridian arc s/8 from each
/// tip, and a C^3 curvature ramp of half-width s/64 across the joins. The
/// profile integrates phi'' = -K(r) phi with K >= 1 pointwise, so the
/// curvature bound is exact by construction; the final rescale guards the
/// bound against sampling noise and is reported.
WarpProfile build_smoothed_football(int k, double s, int samples = 131072);

/// Length of the parallel-circle geodesic at the interior maximum of phi
/// (Clairaut). Errors when the maximum sits at an endpoint.
double closed_geodesic_length(const WarpProfile& w);

/// Length of the closed geodesic through both poles (a meridian traversed
/// down one side and up the other): 2 r_max.
double meridian_loop_length(const WarpProfile& w);

/// Integral of K over the surface, which equals 2 pi (phi'(0) - phi'(r_max)).
double total_curvature(const WarpProfile& w);

/// Farthest-point metric sample of the surface via shortest paths on the
/// (r, theta) lattice with pole nodes; slack certified as in geodesy.
MetricSample geodesic_sample(const WarpProfile& w, int m, int nr = 192, int ntheta = 192,
                             const std::string& tag = {});

}  // namespace capstab
