#include "capstab/polar_grid.hpp"

#include <algorithm>

#include "capstab/numerics.hpp"

namespace capstab {

GridField make_field(const PolarGrid& grid, const std::function<double(double, double)>& f) {
    GridField out(grid);
    for (int i = 0; i <= grid.nr; ++i)
        for (int j = 0; j < grid.ntheta; ++j) {
            double x, y;
            grid.node_xy(i, j, x, y);
            out.values[grid.index(i, j)] = f(x, y);
        }
    out.assert_finite();
    return out;
}

GridField make_radial_field(const PolarGrid& grid, const std::function<double(double)>& f) {
    GridField out(grid);
    for (int i = 0; i <= grid.nr; ++i) {
        const double v = f(i == grid.nr ? 1.0 : grid.radius(i));
        for (int j = 0; j < grid.ntheta; ++j) out.values[grid.index(i, j)] = v;
    }
    out.assert_finite();
    return out;
}

GridField field_map(const GridField& f, const std::function<double(double)>& op) {
    GridField out(f.grid);
    for (size_t k = 0; k < f.values.size(); ++k) out.values[k] = op(f.values[k]);
    return out;
}

GridField field_combine(const GridField& a, const GridField& b,
                        const std::function<double(double, double)>& op) {
    if (a.grid != b.grid) throw std::invalid_argument("field_combine: grid mismatch");
    GridField out(a.grid);
    for (size_t k = 0; k < a.values.size(); ++k) out.values[k] = op(a.values[k], b.values[k]);
    return out;
}

GridField laplacian(const GridField& f) {
    const PolarGrid& g = f.grid;
    GridField out(g);
    const int nt = g.ntheta;
    for (int i = 0; i < g.nr; ++i) {
        const double ri = g.radius(i);
        const double rp = (i + 1) * g.hr;  // r_{i+1/2}
        const double rm = i * g.hr;        // r_{i-1/2}, zero on the innermost ring
        const double cr = 1.0 / (ri * g.hr * g.hr);
        const double ct = 1.0 / (ri * ri * g.htheta * g.htheta);
        for (int j = 0; j < nt; ++j) {
            const double fc = f.at(i, j);
            const double fup = (i == g.nr - 1) ? f.boundary(j) : f.at(i + 1, j);
            const double fdn = (i == 0) ? f.at(0, g.wrap(j + nt / 2)) : f.at(i - 1, j);
            const double radial = cr * (rp * (fup - fc) - rm * (fc - fdn));
            const double angular =
                ct * (f.at(i, g.wrap(j + 1)) - 2.0 * fc + f.at(i, g.wrap(j - 1)));
            out.at(i, j) = radial + angular;
        }
    }
    return out;
}

std::vector<double> normal_derivative(const GridField& f) {
    const PolarGrid& g = f.grid;
    if (g.nr < 3) throw std::invalid_argument("normal_derivative: need nr >= 3");
    std::vector<double> dn(g.ntheta);
    for (int j = 0; j < g.ntheta; ++j)
        dn[j] = (3.0 * f.boundary(j) - 4.0 * f.at(g.nr - 1, j) + f.at(g.nr - 2, j)) /
                (2.0 * g.hr);
    return dn;
}

GridField gradient_magnitude(const GridField& f) {
    const PolarGrid& g = f.grid;
    GridField out(g);
    const int nt = g.ntheta;
    for (int i = 0; i <= g.nr; ++i) {
        const double r = (i == g.nr) ? 1.0 : g.radius(i);
        for (int j = 0; j < nt; ++j) {
            double fr;
            if (i == g.nr) {
                fr = (3.0 * f.boundary(j) - 4.0 * f.at(g.nr - 1, j) + f.at(g.nr - 2, j)) /
                     (2.0 * g.hr);
            } else {
                const double fup = (i == g.nr - 1) ? f.boundary(j) : f.at(i + 1, j);
                const double fdn = (i == 0) ? f.at(0, g.wrap(j + nt / 2)) : f.at(i - 1, j);
                fr = (fup - fdn) / (2.0 * g.hr);
            }
            const double ft =
                (f.at(i, g.wrap(j + 1)) - f.at(i, g.wrap(j - 1))) / (2.0 * g.htheta);
            out.at(i, j) = std::hypot(fr, ft / r);
        }
    }
    return out;
}

namespace {

double interior_lp(const GridField& f, double p, double rcap) {
    const PolarGrid& g = f.grid;
    KahanSum s;
    for (int i = 0; i < g.nr; ++i) {
        if (g.radius(i) > rcap) break;
        const double w = g.area_weight(i);
        for (int j = 0; j < g.ntheta; ++j) s.add(w * std::pow(std::abs(f.at(i, j)), p));
    }
    return std::pow(s.value(), 1.0 / p);
}

}  // namespace

double lp_norm(const GridField& f, double p, Region region) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw std::invalid_argument("lp_norm: p must be finite and >= 1");
    if (region == Region::Interior) return interior_lp(f, p, 2.0);
    KahanSum s;
    const double w = f.grid.boundary_weight();
    for (int j = 0; j < f.grid.ntheta; ++j)
        s.add(w * std::pow(std::abs(f.boundary(j)), p));
    return std::pow(s.value(), 1.0 / p);
}

double max_norm(const GridField& f, Region region) {
    const PolarGrid& g = f.grid;
    double m = 0.0;
    if (region == Region::Interior) {
        for (int k = 0; k < g.interior_count(); ++k) m = std::max(m, std::abs(f.values[k]));
    } else {
        for (int j = 0; j < g.ntheta; ++j) m = std::max(m, std::abs(f.boundary(j)));
    }
    return m;
}

double lp_norm_subdisk(const GridField& f, double p, double rcap) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw std::invalid_argument("lp_norm_subdisk: p must be finite and >= 1");
    return interior_lp(f, p, rcap);
}

double w1p_norm(const GridField& f, double p) { return w1p_norm_subdisk(f, p, 2.0); }

double w1p_norm_subdisk(const GridField& f, double p, double rcap) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw std::invalid_argument("w1p_norm: p must be finite and >= 1");
    const GridField gm = gradient_magnitude(f);
    const double a = interior_lp(f, p, rcap);
    const double b = interior_lp(gm, p, rcap);
    return std::pow(std::pow(a, p) + std::pow(b, p), 1.0 / p);
}

double integrate(const GridField& f) {
    const PolarGrid& g = f.grid;
    KahanSum s;
    for (int i = 0; i < g.nr; ++i) {
        const double w = g.area_weight(i);
        for (int j = 0; j < g.ntheta; ++j) s.add(w * f.at(i, j));
    }
    return s.value();
}

double integrate_boundary(const GridField& f) {
    KahanSum s;
    const double w = f.grid.boundary_weight();
    for (int j = 0; j < f.grid.ntheta; ++j) s.add(w * f.boundary(j));
    return s.value();
}

}  // namespace capstab
