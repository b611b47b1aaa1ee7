#pragma once

#include <vector>

#include "capstab/conformal_metric.hpp"

namespace capstab {

/// Pairwise geodesic distances of a node sample, with the certified
/// sampling/discretization slack carried alongside.
struct DistanceMatrix {
    std::vector<int> indices;  // flat node indices into the grid
    std::vector<double> d;     // row-major, symmetric, zero diagonal
    double slack = 0.0;

    int size() const { return static_cast<int>(indices.size()); }
    double at(int i, int j) const { return d[static_cast<size_t>(i) * indices.size() + j]; }
};

/// Relative metrication constant of the stencil below, verified empirically
/// by the graph-consistency test.
inline constexpr double kGraphConstant = 0.08;

/// Shortest-path stencil: the 8 lattice neighbors, the second-ring diagonal
/// shortcuts, and longer shortcut rungs. Polar cells are up to 2*pi wide per
/// radial step near the boundary, so the plain 16-neighborhood leaves a 72
/// degree directional gap there (23% worst-case overestimation); the extra
/// rungs cap the gap at 38 degrees, which keeps the metrication error under
/// kGraphConstant at every radius.
inline constexpr int kStencilOffsets[][2] = {
    {1, 0},  {-1, 0}, {0, 1},  {0, -1}, {1, 1},  {1, -1}, {-1, 1}, {-1, -1},
    {1, 2},  {1, -2}, {-1, 2}, {-1, -2}, {2, 1},  {2, -1}, {-2, 1}, {-2, -1},
    {3, 1},  {3, -1}, {-3, 1}, {-3, -1}, {5, 1},  {5, -1}, {-5, 1}, {-5, -1},
    {8, 1},  {8, -1}, {-8, 1}, {-8, -1}, {1, 3},  {1, -3}, {-1, 3}, {-1, -3},
    {1, 5},  {1, -5}, {-1, 5}, {-1, -5}, {1, 8},  {1, -8}, {-1, 8}, {-1, -8}};
inline constexpr int kStencilSize = 40;

/// Shortest-path graph on the polar lattice: 8 stencil neighbors plus the
/// second-ring diagonal shortcuts (16 directions), edge weight = Euclidean
/// chord length times the average of e^u at the endpoints. Innermost rings
/// connect across the origin through the opposite ray.
class GeodesicGraph {
  public:
    explicit GeodesicGraph(const ConformalFactor& u);

    /// Distances from one source node to every node.
    std::vector<double> distances_from(int source) const;

    /// Distance to the nearest boundary node, for every node.
    std::vector<double> distances_from_boundary() const;

    double slack() const { return slack_; }
    const PolarGrid& grid() const { return grid_; }
    double max_conformal_scale() const { return max_eu_; }

  private:
    std::vector<double> run_dijkstra(const std::vector<int>& sources) const;

    PolarGrid grid_;
    // CSR adjacency with precomputed weights: edge weights integrate e^u
    // along the chord by a composite trapezoid rule, so the long shortcut
    // rungs carry correct metric lengths.
    std::vector<int> adj_start_;
    std::vector<int> adj_target_;
    std::vector<double> adj_weight_;
    double slack_ = 0.0;
    double max_eu_ = 0.0;
};

/// Geodesic distance matrix over the given node sample.
DistanceMatrix distance_matrix(const ConformalFactor& u, const std::vector<int>& sample);

/// Intrinsic inradius: max over interior nodes of the distance to the
/// boundary circle.
double inradius(const ConformalFactor& u);

/// Diameter estimated over a farthest-point sample (size >= 64).
double diameter(const ConformalFactor& u, int sample_size = 64);

/// Metric ball volume: sum of e^{2u} area weights over nodes within graph
/// distance s of the center node. s must lie in (0, pi).
double ball_volume(const ConformalFactor& u, int center, double s);
double ball_volume(const GeodesicGraph& graph, const ConformalFactor& u, int center, double s);

struct VolumeComparisonEntry {
    int center = 0;
    double radius = 0.0;
    double volume_u = 0.0;
    double volume_model = 0.0;
    double margin = 0.0;  // volume_u - volume_model
};

/// Checks vol_u(B_s(x)) <= vol_{rho_c}(B_s(x)) over the given centers/radii.
std::vector<VolumeComparisonEntry> volume_comparison_check(const ConformalFactor& u, double c,
                                                           const std::vector<int>& centers,
                                                           const std::vector<double>& radii);

/// Farthest-point selection on the grid (deterministic, seeded at node 0).
struct FarthestPointResult {
    std::vector<int> indices;
    double covering_radius = 0.0;       // max over nodes of distance to the sample, plus slack
    double last_insertion = 0.0;
};

FarthestPointResult farthest_point_indices(const ConformalFactor& u, int m);

}  // namespace capstab
