#include "capstab/conformal_metric.hpp"

#include <algorithm>
#include <cmath>

#include "capstab/numerics.hpp"

namespace capstab {

double admissibility_slack(const PolarGrid& grid) { return 10.0 * grid.h() * grid.h(); }

ConformalFactor ConformalFactor::unchecked(GridField f, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("ConformalFactor: c must be > 0");
    f.assert_finite();
    ConformalFactor u;
    u.field = std::move(f);
    u.c = c;
    return u;
}

ConformalFactor ConformalFactor::verified(GridField f, double c, double tol_k) {
    ConformalFactor u = unchecked(std::move(f), c);
    const GridField k = gaussian_curvature(u);
    int worst = -1;
    double margin = 0.0;
    for (int idx = 0; idx < u.grid().interior_count(); ++idx) {
        const double m = k.values[idx] - 1.0;
        if (m < margin) {
            margin = m;
            worst = idx;
        }
    }
    if (margin < -tol_k)
        throw AdmissibilityError("curvature admissibility violated: K < 1", worst, margin);
    const std::vector<double> kappa = boundary_curvature(u);
    worst = -1;
    margin = 0.0;
    for (int j = 0; j < u.grid().ntheta; ++j) {
        const double m = kappa[j] - c;
        if (m < margin) {
            margin = m;
            worst = u.grid().boundary_index(j);
        }
    }
    if (margin < -tol_k)
        throw AdmissibilityError("boundary admissibility violated: kappa < c", worst, margin);
    return u;
}

GridField gaussian_curvature(const ConformalFactor& u) {
    GridField lap = laplacian(u.field);
    const PolarGrid& g = u.grid();
    GridField out(g);
    for (int idx = 0; idx < g.interior_count(); ++idx)
        out.values[idx] = -lap.values[idx] * std::exp(-2.0 * u.field.values[idx]);
    return out;
}

std::vector<double> boundary_curvature(const ConformalFactor& u) {
    std::vector<double> dn = normal_derivative(u.field);
    for (int j = 0; j < u.grid().ntheta; ++j)
        dn[j] = (dn[j] + 1.0) * std::exp(-u.field.boundary(j));
    return dn;
}

double boundary_length(const ConformalFactor& u) {
    KahanSum s;
    const double w = u.grid().boundary_weight();
    for (int j = 0; j < u.grid().ntheta; ++j) s.add(w * std::exp(u.field.boundary(j)));
    return s.value();
}

double area(const ConformalFactor& u) {
    const PolarGrid& g = u.grid();
    KahanSum s;
    for (int i = 0; i < g.nr; ++i) {
        const double w = g.area_weight(i);
        for (int j = 0; j < g.ntheta; ++j) s.add(w * std::exp(2.0 * u.field.at(i, j)));
    }
    return s.value();
}

double gauss_bonnet_residual(const ConformalFactor& u) {
    // K e^{2u} = -Lap(u) and kappa e^u = d_n u + 1, so this is the discrete
    // divergence identity plus the exact 2 pi from the boundary term.
    const GridField lap = laplacian(u.field);
    const std::vector<double> dn = normal_derivative(u.field);
    const PolarGrid& g = u.grid();
    KahanSum s;
    for (int i = 0; i < g.nr; ++i) {
        const double w = g.area_weight(i);
        for (int j = 0; j < g.ntheta; ++j) s.add(-w * lap.at(i, j));
    }
    for (int j = 0; j < g.ntheta; ++j) s.add(g.boundary_weight() * (dn[j] + 1.0));
    return std::abs(s.value() - 2.0 * M_PI);
}

ConformalFactor model_cap_factor(double c, const PolarGrid& grid) {
    return ConformalFactor::verified(model_factor(c, grid), c, admissibility_slack(grid));
}

double eta_family_boundary_length(double c, double eta) {
    return 2.0 * M_PI / std::sqrt(1.0 + eta + c * c);
}

double eta_family_epsilon(double c, double eta) {
    return 1.0 - std::sqrt(1.0 + c * c) / std::sqrt(1.0 + eta + c * c);
}

EtaMember eta_family(double c, double eta, const PolarGrid& grid) {
    if (!(c > 0.0)) throw std::invalid_argument("eta_family: c must be > 0");
    if (!(eta > 0.0)) throw std::invalid_argument("eta_family: eta must be > 0");
    const double cp = c / std::sqrt(1.0 + eta);
    const double shift = 0.5 * std::log1p(eta);
    GridField f = model_factor(cp, grid);
    for (double& v : f.values) v -= shift;
    EtaMember m{ConformalFactor::verified(std::move(f), c, admissibility_slack(grid)), eta,
                eta_family_epsilon(c, eta)};
    return m;
}

namespace {

// C-infinity bump, 1 at the center, supported on s < 1.
double mollifier(double s) {
    if (s >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

}  // namespace

ConformalFactor bump_family(double c, double eta, double amplitude, double center_x,
                            double center_y, double width, const PolarGrid& grid) {
    if (!(width > 0.0)) throw std::invalid_argument("bump_family: width must be > 0");
    const double rc = std::hypot(center_x, center_y);
    if (rc + width >= 1.0)
        throw std::invalid_argument("bump_family: bump support must be strictly interior");
    const EtaMember base = eta_family(c, eta, grid);
    GridField f = base.factor.field;
    for (int i = 0; i <= grid.nr; ++i)
        for (int j = 0; j < grid.ntheta; ++j) {
            double x, y;
            grid.node_xy(i, j, x, y);
            const double s = std::hypot(x - center_x, y - center_y) / width;
            f.values[grid.index(i, j)] += amplitude * mollifier(s);
        }
    // Only admissible metrics escape; verified() throws with the worst node
    // and margin otherwise.
    return ConformalFactor::verified(std::move(f), c, admissibility_slack(grid));
}

}  // namespace capstab
