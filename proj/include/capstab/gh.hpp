#pragma once

#include <string>
#include <vector>

#include "capstab/geodesy.hpp"

namespace capstab {

/// Finite metric sample with its sampling-density certificate.
struct MetricSample {
    int n = 0;
    std::vector<double> d;  // row-major symmetric distance matrix
    double covering_radius = 0.0;
    std::string tag;

    double at(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }
    double diam() const;
    /// min over points of the max distance to the rest (eccentricity of the
    /// best center).
    double rad() const;

    void validate(double tol = 1e-9) const;
};

/// Builds a sample from explicit points/distances (covering radius 0 unless
/// stated) for abstract test spaces.
MetricSample make_abstract_sample(const std::vector<double>& dmat, int n, std::string tag,
                                  double covering_radius = 0.0);

/// Farthest-point sample of a conformal disk (deterministic, seeded at
/// node 0): covering radius is the certified max distance of any grid node to
/// the sample plus the geodesy slack.
MetricSample farthest_point_sample(const ConformalFactor& u, int m, std::string tag = {});

/// Sample of a (possibly different) factor at prescribed node indices, with
/// the covering radius measured in that factor's own metric. Used to build
/// aligned samples for the identity-correspondence bound.
MetricSample sample_at_indices(const ConformalFactor& u, const std::vector<int>& indices,
                               std::string tag = {});

/// Identity-correspondence upper bound for aligned samples:
/// half the sup distance mismatch plus both covering radii.
double gh_upper_identity(const MetricSample& a, const MetricSample& b);

/// The distortion part alone, half of max_ij |d_a - d_b|.
double gh_identity_distortion(const MetricSample& a, const MetricSample& b);

/// Certified lower bound on the GH distance of the underlying spaces:
/// max of half the diameter gap, half the radius gap, and the best
/// packing-vs-covering separation, minus both covering slacks, floored at 0.
double gh_lower(const MetricSample& a, const MetricSample& b);

/// Exact GH distance of small spaces (n <= 6) by exhaustive search over
/// surjection pairs, which realize the minimal-distortion correspondence.
double gh_exact_small(const MetricSample& a, const MetricSample& b);

}  // namespace capstab
