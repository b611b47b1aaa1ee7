#include "capstab/estimates.hpp"

#include <algorithm>
#include <cmath>

#include "capstab/interpolate.hpp"
#include "capstab/numerics.hpp"
#include "capstab/poisson.hpp"

namespace capstab {

WReport w_report(const ConformalFactor& u, const ComparisonSolution& sol,
                 const std::vector<double>& lambdas, const std::vector<double>& ps) {
    const PolarGrid& g = u.grid();
    if (sol.v.grid() != g) throw std::invalid_argument("w_report: grid mismatch");
    WReport rep;
    rep.w = field_combine(u.field, sol.v.field, [](double a, double b) { return a - b; });

    const GridField lap_w = laplacian(rep.w);
    rep.l1_laplacian = lp_norm(lap_w, 1.0, Region::Interior);
    rep.min_neg_lap_w = 0.0;
    for (int k = 0; k < g.interior_count(); ++k)
        rep.min_neg_lap_w = std::min(rep.min_neg_lap_w, -lap_w.values[k]);

    rep.min_w = *std::min_element(rep.w.values.begin(), rep.w.values.end());
    rep.max_boundary_w = 0.0;
    for (int j = 0; j < g.ntheta; ++j)
        rep.max_boundary_w = std::max(rep.max_boundary_w, std::abs(rep.w.boundary(j)));

    for (double lambda : lambdas) {
        if (lambda < 1.0) throw std::invalid_argument("w_report: lambda must be >= 1");
        const GridField ew = field_map(rep.w, [lambda](double x) { return std::exp(lambda * x); });
        const double integral = integrate(ew);
        rep.exp_integrals[lambda] = integral;
        rep.mu[lambda] = integral / M_PI;
        for (double p : ps) {
            if (!(p >= 1.0) || !(p < 2.0))
                throw std::invalid_argument("w_report: p must lie in [1, 2)");
            const GridField em1 =
                field_map(rep.w, [lambda](double x) { return std::expm1(lambda * x); });
            rep.prop_norms[{lambda, p}] = w1p_norm(em1, p);
        }
    }
    for (double p : ps) {
        rep.grad_lp[p] = lp_norm(gradient_magnitude(rep.w), p, Region::Interior);
        rep.w1p[p] = w1p_norm(rep.w, p);
    }

    KahanSum flux;
    const std::vector<double> dn = normal_derivative(rep.w);
    for (int j = 0; j < g.ntheta; ++j) flux.add(g.boundary_weight() * dn[j]);
    rep.boundary_flux = flux.value();
    return rep;
}

FluxCheck check_flux(const WReport& report, const ConformalFactor& u,
                     const ComparisonSolution& sol) {
    FluxCheck out;
    out.abs_flux = std::abs(report.boundary_flux);
    out.identity_gap = std::abs(report.l1_laplacian - out.abs_flux);

    // Gauss-Bonnet route: (kappa_u - kappa_v) e^u equals d_n u - d_n v on the
    // circle because u and v share boundary values.
    const std::vector<double> ku = boundary_curvature(u);
    const std::vector<double> kv = boundary_curvature(sol.v);
    KahanSum s;
    for (int j = 0; j < u.grid().ntheta; ++j)
        s.add(u.grid().boundary_weight() * (ku[j] - kv[j]) * std::exp(u.field.boundary(j)));
    out.gauss_bonnet_gap = std::abs(report.boundary_flux - s.value());
    return out;
}

BrezisMerleResult brezis_merle_check(const GridField& f, double delta) {
    if (!(delta > 0.0) || !(delta < 4.0 * M_PI))
        throw std::invalid_argument("brezis_merle_check: delta must lie in (0, 4 pi)");
    BrezisMerleResult out;
    out.rhs = 4.0 * M_PI * M_PI / delta * 4.0;  // diam of the unit disk is 2
    const double f_l1 = lp_norm(f, 1.0, Region::Interior);
    if (f_l1 == 0.0) {
        out.lhs = M_PI;
        out.ratio = out.lhs / out.rhs;
        return out;
    }
    const GridField w = solve_poisson_zero_bc(f);
    const double coef = (4.0 * M_PI - delta) / f_l1;
    const GridField e = field_map(w, [coef](double x) { return std::exp(coef * std::abs(x)); });
    out.lhs = integrate(e);
    out.ratio = out.lhs / out.rhs;
    return out;
}

double green_gradient_bound_check(const std::vector<GridField>& fs, double p) {
    if (!(p >= 1.0) || !(p < 2.0))
        throw std::invalid_argument("green_gradient_bound_check: p must lie in [1, 2)");
    double worst = 0.0;
    for (const GridField& f : fs) {
        const double f_l1 = lp_norm(f, 1.0, Region::Interior);
        if (f_l1 == 0.0) throw std::invalid_argument("green_gradient_bound_check: zero field");
        const GridField w = solve_poisson_zero_bc(f);
        const double g_lp = lp_norm(gradient_magnitude(w), p, Region::Interior);
        worst = std::max(worst, g_lp / f_l1);
    }
    return worst;
}

TraceResult trace_check(const GridField& f, double p,
                        const std::vector<std::array<double, 2>>& polyline, double rcap) {
    if (!(p >= 1.0)) throw std::invalid_argument("trace_check: p must be >= 1");
    if (polyline.size() < 2) throw std::invalid_argument("trace_check: polyline too short");
    for (const auto& q : polyline)
        if (std::hypot(q[0], q[1]) > rcap + 1e-12)
            throw std::invalid_argument("trace_check: curve exits the subdisk");
    const PolarInterpolator interp(f);
    KahanSum s;
    const double step_target = 0.25 * f.grid.hr;
    for (size_t k = 0; k + 1 < polyline.size(); ++k) {
        const double dx = polyline[k + 1][0] - polyline[k][0];
        const double dy = polyline[k + 1][1] - polyline[k][1];
        const double len = std::hypot(dx, dy);
        const int steps = std::max(1, static_cast<int>(std::ceil(len / step_target)));
        const double ds = len / steps;
        for (int q = 0; q < steps; ++q) {
            const double t = (q + 0.5) / steps;
            const double x = polyline[k][0] + t * dx;
            const double y = polyline[k][1] + t * dy;
            s.add(std::pow(std::abs(interp(x, y)), p) * ds);
        }
    }
    TraceResult out;
    out.trace_norm = std::pow(s.value(), 1.0 / p);
    out.volume_norm = w1p_norm_subdisk(f, p, rcap);
    out.ratio = out.volume_norm > 0.0 ? out.trace_norm / out.volume_norm : 0.0;
    return out;
}

}  // namespace capstab
