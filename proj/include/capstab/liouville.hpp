#pragma once

#include "capstab/conformal_metric.hpp"
#include "capstab/poisson.hpp"

namespace capstab {

/// Result of the constant-curvature comparison solve: v with -Lap(v) = e^{2v}
/// in the disk and v = u on the circle.
struct ComparisonSolution {
    ConformalFactor v;
    double residual_inf = 0.0;     // max-norm of Lap(v) + e^{2v} at interior nodes
    double residual_scaled = 0.0;  // residual_inf / (1 + max e^{2v})
    int newton_iters = 0;
    double ordering_margin = 0.0;  // min over nodes of u - v
};

struct SolveOptions {
    double tol = 1e-10;       // on the scaled residual (and required unscaled)
    int max_iters = 30;
    double init_offset = 0.0; // v0 = u + init_offset
    bool record_iterates = false;
};

/// Damped Newton iteration on F(v) = Lap(v) + e^{2v}, initialized at the
/// supersolution v0 = u, Dirichlet data copied from u's boundary ring.
/// Iterates are recorded when requested (used by the monotonicity checks).
ComparisonSolution solve_comparison(const ConformalFactor& u, const SolveOptions& opts = {},
                                    std::vector<GridField>* iterates = nullptr);

struct RobinReport {
    double robin_margin = 0.0;  // min over boundary nodes of (d_n v + 1) - c e^v
    double max_dn_w = 0.0;      // max over boundary nodes of d_n(u - v)
};

/// Checks the Robin inequality d_n v + 1 >= c e^v on the circle and the sign
/// of the normal derivative of w = u - v.
RobinReport verify_robin(const ComparisonSolution& sol, const ConformalFactor& u);

}  // namespace capstab
