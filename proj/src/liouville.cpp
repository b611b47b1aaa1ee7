#include "capstab/liouville.hpp"

#include <algorithm>
#include <cmath>

namespace capstab {

namespace {

// Interior residual F(v) = Lap(v) + e^{2v} with its max norm and the
// quadrature-weighted L2 norm. Backtracking decides on the L2 norm, which
// stays a smooth descent measure when the linearization is nearly singular
// (the geodesic-boundary limit); the stopping rule stays in the max norm.
GridField residual_field(const GridField& v, double& res_inf, double& res_l2, double& max_e2v) {
    const PolarGrid& g = v.grid;
    GridField res = laplacian(v);
    res_inf = 0.0;
    max_e2v = 0.0;
    double l2 = 0.0;
    for (int i = 0; i < g.nr; ++i) {
        const double w = g.area_weight(i);
        for (int j = 0; j < g.ntheta; ++j) {
            const int k = g.index(i, j);
            const double e2 = std::exp(2.0 * v.values[k]);
            res.values[k] += e2;
            max_e2v = std::max(max_e2v, e2);
            res_inf = std::max(res_inf, std::abs(res.values[k]));
            l2 += w * res.values[k] * res.values[k];
        }
    }
    res_l2 = std::sqrt(l2);
    return res;
}

}  // namespace

ComparisonSolution solve_comparison(const ConformalFactor& u, const SolveOptions& opts,
                                    std::vector<GridField>* iterates) {
    if (!(opts.tol >= 1e-12)) throw std::invalid_argument("solve_comparison: tol must be >= 1e-12");
    const PolarGrid& g = u.grid();
    GridField v = u.field;
    if (opts.init_offset != 0.0) {
        for (int k = 0; k < g.interior_count(); ++k) v.values[k] += opts.init_offset;
    }
    if (iterates) iterates->push_back(v);

    double res_inf = 0.0, res_l2 = 0.0, max_e2v = 0.0;
    GridField res = residual_field(v, res_inf, res_l2, max_e2v);
    int iter = 0;
    while (true) {
        const double scaled = res_inf / (1.0 + max_e2v);
        if (scaled <= opts.tol && res_inf <= opts.tol) break;
        if (iter >= opts.max_iters)
            throw SolveFailure("Newton iteration did not converge", res_inf);
        ++iter;

        // Linearization (Lap + 2 e^{2v}) delta = -F(v), delta = 0 on the circle.
        std::vector<double> shift(g.interior_count());
        std::vector<double> rhs(g.interior_count());
        for (int k = 0; k < g.interior_count(); ++k) {
            shift[k] = -2.0 * std::exp(2.0 * v.values[k]);
            rhs[k] = -res.values[k];
        }
        GridField zero(g);
        const GridField delta = solve_helmholtz(g, shift, rhs, zero);

        // Backtracking: halve until the residual norm decreases.
        double step = 1.0;
        GridField vnext(g);
        double next_inf = 0.0, next_l2 = 0.0, next_e2v = 0.0;
        GridField next_res(g);
        while (true) {
            vnext = v;
            for (int k = 0; k < g.interior_count(); ++k)
                vnext.values[k] += step * delta.values[k];
            next_res = residual_field(vnext, next_inf, next_l2, next_e2v);
            if (next_l2 < res_l2) break;
            step *= 0.5;
            if (step < 1e-10)
                throw SolveFailure("Newton backtracking stalled", res_inf);
        }
        v = std::move(vnext);
        res = std::move(next_res);
        res_inf = next_inf;
        res_l2 = next_l2;
        max_e2v = next_e2v;
        if (iterates) iterates->push_back(v);
    }

    ComparisonSolution sol{ConformalFactor::unchecked(std::move(v), u.c), res_inf,
                           res_inf / (1.0 + max_e2v), iter, 0.0};
    double margin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < g.interior_count(); ++k)
        margin = std::min(margin, u.field.values[k] - sol.v.field.values[k]);
    sol.ordering_margin = margin;
    return sol;
}

RobinReport verify_robin(const ComparisonSolution& sol, const ConformalFactor& u) {
    const PolarGrid& g = u.grid();
    const std::vector<double> dn_v = normal_derivative(sol.v.field);
    const std::vector<double> dn_u = normal_derivative(u.field);
    RobinReport rep;
    rep.robin_margin = std::numeric_limits<double>::infinity();
    rep.max_dn_w = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < g.ntheta; ++j) {
        const double ev = std::exp(sol.v.field.boundary(j));
        rep.robin_margin = std::min(rep.robin_margin, dn_v[j] + 1.0 - u.c * ev);
        rep.max_dn_w = std::max(rep.max_dn_w, dn_u[j] - dn_v[j]);
    }
    return rep;
}

}  // namespace capstab
