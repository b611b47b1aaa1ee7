#include "capstab/geodesy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "capstab/interpolate.hpp"
#include "capstab/poisson.hpp"

namespace capstab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

GeodesicGraph::GeodesicGraph(const ConformalFactor& u) : grid_(u.grid()) {
    const int n = grid_.node_count();
    const int nt = grid_.ntheta;
    std::vector<double> eu(n), px(n), py(n);
    for (int i = 0; i <= grid_.nr; ++i)
        for (int j = 0; j < grid_.ntheta; ++j) {
            const int k = grid_.index(i, j);
            eu[k] = std::exp(u.field.values[k]);
            grid_.node_xy(i, j, px[k], py[k]);
        }
    max_eu_ = *std::max_element(eu.begin(), eu.end());
    slack_ = kGraphConstant * grid_.h() * max_eu_;

    const PolarInterpolator interp(u.field);
    adj_start_.assign(n + 1, 0);
    adj_target_.reserve(static_cast<size_t>(n) * kStencilSize);
    adj_weight_.reserve(static_cast<size_t>(n) * kStencilSize);
    for (int node = 0; node < n; ++node) {
        const int i = node / nt;
        const int j = node % nt;
        for (const auto& off : kStencilOffsets) {
            int ti = i + off[0];
            int tj = j + off[1];
            if (ti < 0) {
                // Across the origin: signed ring m < 0 is ring -1-m on the
                // opposite ray.
                ti = -1 - ti;
                tj += nt / 2;
            }
            if (ti > grid_.nr) continue;
            const int t = grid_.index(ti, grid_.wrap(tj));
            if (t == node) continue;
            const int segments = std::max({std::abs(off[0]), std::abs(off[1]), 1});
            const double dx = (px[t] - px[node]) / segments;
            const double dy = (py[t] - py[node]) / segments;
            const double seg = std::hypot(dx, dy);
            double w = 0.0;
            double prev = eu[node];
            for (int k = 1; k <= segments; ++k) {
                const double cur = k == segments
                                       ? eu[t]
                                       : std::exp(interp(px[node] + k * dx, py[node] + k * dy));
                w += seg * 0.5 * (prev + cur);
                prev = cur;
            }
            adj_target_.push_back(t);
            adj_weight_.push_back(w);
        }
        adj_start_[node + 1] = static_cast<int>(adj_target_.size());
    }
}

std::vector<double> GeodesicGraph::run_dijkstra(const std::vector<int>& sources) const {
    const int n = grid_.node_count();
    std::vector<double> dist(n, kInf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    for (int s : sources) {
        dist[s] = 0.0;
        queue.push({0.0, s});
    }
    while (!queue.empty()) {
        const auto [du, node] = queue.top();
        queue.pop();
        if (du > dist[node]) continue;
        for (int e = adj_start_[node]; e < adj_start_[node + 1]; ++e) {
            const int t = adj_target_[e];
            const double cand = du + adj_weight_[e];
            if (cand < dist[t]) {
                dist[t] = cand;
                queue.push({cand, t});
            }
        }
    }
    return dist;
}

std::vector<double> GeodesicGraph::distances_from(int source) const {
    if (source < 0 || source >= grid_.node_count())
        throw std::invalid_argument("distances_from: bad source index");
    return run_dijkstra({source});
}

std::vector<double> GeodesicGraph::distances_from_boundary() const {
    std::vector<int> sources(grid_.ntheta);
    for (int j = 0; j < grid_.ntheta; ++j) sources[j] = grid_.boundary_index(j);
    return run_dijkstra(sources);
}

DistanceMatrix distance_matrix(const ConformalFactor& u, const std::vector<int>& sample) {
    if (sample.empty()) throw std::invalid_argument("distance_matrix: empty sample");
    const GeodesicGraph graph(u);
    const int m = static_cast<int>(sample.size());
    DistanceMatrix dm;
    dm.indices = sample;
    dm.slack = graph.slack();
    dm.d.assign(static_cast<size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) {
        const std::vector<double> dist = graph.distances_from(sample[i]);
        for (int j = 0; j < m; ++j) {
            if (!std::isfinite(dist[sample[j]]))
                throw SolveFailure("distance_matrix: disconnected sample", 0.0);
            dm.d[static_cast<size_t>(i) * m + j] = dist[sample[j]];
        }
    }
    // Symmetrize exactly; Dijkstra from either endpoint agrees to roundoff.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const double v = 0.5 * (dm.at(i, j) + dm.at(j, i));
            dm.d[static_cast<size_t>(i) * m + j] = v;
            dm.d[static_cast<size_t>(j) * m + i] = v;
        }
    return dm;
}

double inradius(const ConformalFactor& u) {
    const GeodesicGraph graph(u);
    const std::vector<double> dist = graph.distances_from_boundary();
    double best = 0.0;
    for (int k = 0; k < u.grid().interior_count(); ++k) best = std::max(best, dist[k]);
    return best;
}

FarthestPointResult farthest_point_indices(const ConformalFactor& u, int m) {
    const PolarGrid& g = u.grid();
    if (m < 2) throw std::invalid_argument("farthest_point_indices: need m >= 2");
    if (m > g.node_count())
        throw std::invalid_argument("farthest_point_indices: m exceeds node count");
    const GeodesicGraph graph(u);
    std::vector<int> chosen;
    chosen.reserve(m);
    chosen.push_back(0);
    std::vector<double> mind = graph.distances_from(0);
    double last_insertion = 0.0;
    while (static_cast<int>(chosen.size()) < m) {
        int arg = -1;
        double best = -1.0;
        for (int k = 0; k < g.node_count(); ++k)
            if (mind[k] > best) {
                best = mind[k];
                arg = k;
            }
        last_insertion = best;
        chosen.push_back(arg);
        const std::vector<double> dist = graph.distances_from(arg);
        for (int k = 0; k < g.node_count(); ++k) mind[k] = std::min(mind[k], dist[k]);
    }
    double cover = 0.0;
    for (double v : mind) cover = std::max(cover, v);
    return {std::move(chosen), cover + graph.slack(), last_insertion};
}

double diameter(const ConformalFactor& u, int sample_size) {
    if (sample_size < 64) sample_size = 64;
    sample_size = std::min(sample_size, u.grid().node_count());
    const FarthestPointResult fps = farthest_point_indices(u, sample_size);
    const DistanceMatrix dm = distance_matrix(u, fps.indices);
    return *std::max_element(dm.d.begin(), dm.d.end());
}

double ball_volume(const GeodesicGraph& graph, const ConformalFactor& u, int center, double s) {
    if (!(s > 0.0) || !(s < M_PI))
        throw std::invalid_argument("ball_volume: s must lie in (0, pi)");
    const PolarGrid& g = u.grid();
    const std::vector<double> dist = graph.distances_from(center);
    double vol = 0.0;
    for (int i = 0; i < g.nr; ++i) {
        const double w = g.area_weight(i);
        for (int j = 0; j < g.ntheta; ++j) {
            const int k = g.index(i, j);
            if (dist[k] <= s) vol += w * std::exp(2.0 * u.field.values[k]);
        }
    }
    return vol;
}

double ball_volume(const ConformalFactor& u, int center, double s) {
    const GeodesicGraph graph(u);
    return ball_volume(graph, u, center, s);
}

std::vector<VolumeComparisonEntry> volume_comparison_check(const ConformalFactor& u, double c,
                                                           const std::vector<int>& centers,
                                                           const std::vector<double>& radii) {
    const ConformalFactor model = model_cap_factor(c, u.grid());
    const GeodesicGraph graph_u(u);
    const GeodesicGraph graph_m(model);
    std::vector<VolumeComparisonEntry> out;
    for (int center : centers)
        for (double s : radii) {
            VolumeComparisonEntry e;
            e.center = center;
            e.radius = s;
            e.volume_u = ball_volume(graph_u, u, center, s);
            e.volume_model = ball_volume(graph_m, model, center, s);
            e.margin = e.volume_u - e.volume_model;
            out.push_back(e);
        }
    return out;
}

}  // namespace capstab
