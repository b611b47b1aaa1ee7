#include "capstab/gh.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace capstab {

double MetricSample::diam() const { return d.empty() ? 0.0 : *std::max_element(d.begin(), d.end()); }

double MetricSample::rad() const {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        double ecc = 0.0;
        for (int j = 0; j < n; ++j) ecc = std::max(ecc, at(i, j));
        best = std::min(best, ecc);
    }
    return n == 0 ? 0.0 : best;
}

void MetricSample::validate(double tol) const {
    if (static_cast<int>(d.size()) != n * n)
        throw std::invalid_argument("MetricSample: matrix size mismatch");
    for (int i = 0; i < n; ++i) {
        if (std::abs(at(i, i)) > tol) throw std::invalid_argument("MetricSample: nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            if (at(i, j) < -tol || std::abs(at(i, j) - at(j, i)) > tol)
                throw std::invalid_argument("MetricSample: not symmetric nonnegative");
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (at(i, j) > at(i, k) + at(k, j) + tol)
                    throw std::invalid_argument("MetricSample: triangle inequality violated");
}

MetricSample make_abstract_sample(const std::vector<double>& dmat, int n, std::string tag,
                                  double covering_radius) {
    MetricSample s;
    s.n = n;
    s.d = dmat;
    s.covering_radius = covering_radius;
    s.tag = std::move(tag);
    s.validate();
    return s;
}

MetricSample farthest_point_sample(const ConformalFactor& u, int m, std::string tag) {
    const FarthestPointResult fps = farthest_point_indices(u, m);
    const DistanceMatrix dm = distance_matrix(u, fps.indices);
    MetricSample s;
    s.n = m;
    s.d = dm.d;
    s.covering_radius = fps.covering_radius;
    s.tag = std::move(tag);
    return s;
}

MetricSample sample_at_indices(const ConformalFactor& u, const std::vector<int>& indices,
                               std::string tag) {
    const GeodesicGraph graph(u);
    const int m = static_cast<int>(indices.size());
    MetricSample s;
    s.n = m;
    s.tag = std::move(tag);
    s.d.assign(static_cast<size_t>(m) * m, 0.0);
    double cover = 0.0;
    std::vector<double> mind(u.grid().node_count(), std::numeric_limits<double>::infinity());
    for (int i = 0; i < m; ++i) {
        const std::vector<double> dist = graph.distances_from(indices[i]);
        for (int j = 0; j < m; ++j) s.d[static_cast<size_t>(i) * m + j] = dist[indices[j]];
        for (size_t k = 0; k < mind.size(); ++k) mind[k] = std::min(mind[k], dist[k]);
    }
    for (double v : mind) cover = std::max(cover, v);
    s.covering_radius = cover + graph.slack();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const double v = 0.5 * (s.at(i, j) + s.at(j, i));
            s.d[static_cast<size_t>(i) * m + j] = v;
            s.d[static_cast<size_t>(j) * m + i] = v;
        }
    return s;
}

double gh_identity_distortion(const MetricSample& a, const MetricSample& b) {
    if (a.n != b.n) throw std::invalid_argument("gh_upper_identity: size mismatch");
    double dis = 0.0;
    for (size_t k = 0; k < a.d.size(); ++k) dis = std::max(dis, std::abs(a.d[k] - b.d[k]));
    return 0.5 * dis;
}

double gh_upper_identity(const MetricSample& a, const MetricSample& b) {
    return gh_identity_distortion(a, b) + a.covering_radius + b.covering_radius;
}

namespace {

// Farthest-point insertion distances of the sample under its own matrix,
// seeded at index 0. The k-th prefix is a d_k-separated set whose covering
// radius is d_{k+1}, so greedy packing and covering numbers are prefix
// counts of this one sequence.
std::vector<double> fps_insertion_sequence(const MetricSample& s) {
    std::vector<double> mind(s.n, std::numeric_limits<double>::infinity());
    std::vector<double> seq;
    seq.reserve(s.n);
    seq.push_back(std::numeric_limits<double>::infinity());
    int current = 0;
    for (int step = 1; step < s.n; ++step) {
        for (int j = 0; j < s.n; ++j) mind[j] = std::min(mind[j], s.at(current, j));
        int arg = -1;
        double best = -1.0;
        for (int j = 0; j < s.n; ++j)
            if (mind[j] > best) {
                best = mind[j];
                arg = j;
            }
        seq.push_back(best);
        current = arg;
    }
    return seq;
}

// Greedy packing number: points pairwise >= eps (FPS prefix length).
int greedy_packing(const std::vector<double>& seq, double eps) {
    int count = 0;
    for (double v : seq) {
        if (v >= eps)
            ++count;
        else
            break;
    }
    return count;
}

// Best packing-vs-covering separation between two samples: the largest delta
// such that for some eps, an eps-packing of one side outnumbers a greedy
// ((eps - 2 delta)/2)-covering of the other. With the FPS sequences the
// optimum over delta is available in closed form: covering by the first P-1
// points has radius seq[P], so delta = eps/2 - seq_b[P].
double packing_bound(const MetricSample& a, const MetricSample& b) {
    const std::vector<double> seq_a = fps_insertion_sequence(a);
    const std::vector<double> seq_b = fps_insertion_sequence(b);
    const double diam = std::max(a.diam(), b.diam());
    if (diam <= 0.0) return 0.0;
    double best = 0.0;
    const double lo = 0.05, hi = diam / 2.0;
    for (int k = 0; k < 16; ++k) {
        const double eps = lo * std::pow(hi / lo, k / 15.0);
        for (int dir = 0; dir < 2; ++dir) {
            const auto& pack_seq = dir == 0 ? seq_a : seq_b;
            const auto& cov_seq = dir == 0 ? seq_b : seq_a;
            const int p = greedy_packing(pack_seq, eps);
            if (p < 1 || p >= static_cast<int>(cov_seq.size())) continue;
            // cov(rho) <= p-1 iff rho >= cov_seq[p]; force strict excess.
            const double delta = eps / 2.0 - cov_seq[p];
            best = std::max(best, delta);
        }
    }
    return best;
}

}  // namespace

double gh_lower(const MetricSample& a, const MetricSample& b) {
    const double by_diam = 0.5 * std::abs(a.diam() - b.diam());
    const double by_rad = 0.5 * std::abs(a.rad() - b.rad());
    const double by_pack = packing_bound(a, b);
    const double raw = std::max({by_diam, by_rad, by_pack});
    return std::max(0.0, raw - a.covering_radius - b.covering_radius);
}

namespace {

// Distortion of the correspondence graph(f) united with graph(g) transposed;
// early exit once the running max reaches `cutoff`.
double pair_distortion(const MetricSample& a, const MetricSample& b, const std::vector<int>& f,
                       const std::vector<int>& g, double cutoff) {
    double dis = 0.0;
    const int na = a.n, nb = b.n;
    for (int i = 0; i < na; ++i)
        for (int j = i + 1; j < na; ++j) {
            dis = std::max(dis, std::abs(a.at(i, j) - b.at(f[i], f[j])));
            if (dis >= cutoff) return dis;
        }
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) {
            dis = std::max(dis, std::abs(b.at(i, j) - a.at(g[i], g[j])));
            if (dis >= cutoff) return dis;
        }
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            dis = std::max(dis, std::abs(a.at(i, g[j]) - b.at(f[i], j)));
            if (dis >= cutoff) return dis;
        }
    return dis;
}

double f_only_distortion(const MetricSample& a, const MetricSample& b, const std::vector<int>& f) {
    double dis = 0.0;
    for (int i = 0; i < a.n; ++i)
        for (int j = i + 1; j < a.n; ++j)
            dis = std::max(dis, std::abs(a.at(i, j) - b.at(f[i], f[j])));
    return dis;
}

void enumerate_maps(int domain, int codomain, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> map(domain, 0);
    while (true) {
        visit(map);
        int k = 0;
        while (k < domain && ++map[k] == codomain) map[k++] = 0;
        if (k == domain) break;
    }
}

}  // namespace

double gh_exact_small(const MetricSample& a, const MetricSample& b) {
    if (a.n > 6 || b.n > 6) throw std::invalid_argument("gh_exact_small: spaces must have n <= 6");
    if (a.n == 0 || b.n == 0) throw std::invalid_argument("gh_exact_small: empty space");
    // Any correspondence contains graph(f) U graph(g)^T for some pair of maps
    // f: A -> B, g: B -> A, and shrinking a correspondence cannot increase its
    // distortion, so minimizing over such pairs is exact.
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::vector<int>> fs;
    enumerate_maps(a.n, b.n, [&](const std::vector<int>& f) { fs.push_back(f); });
    for (const auto& f : fs) {
        if (f_only_distortion(a, b, f) >= best) continue;
        enumerate_maps(b.n, a.n, [&](const std::vector<int>& g) {
            const double dis = pair_distortion(a, b, f, g, best);
            best = std::min(best, dis);
        });
    }
    return 0.5 * best;
}

}  // namespace capstab
