#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "capstab/liouville.hpp"

namespace capstab {

/// Quantities of the difference w = u - v between an admissible factor and
/// its constant-curvature comparison: L^1 of the Laplacian, exponential
/// integrals, gradient and Sobolev norms, the W^{1,p} norms of e^{lambda w}-1,
/// the boundary flux of the normal derivative, and the normalized means mu.
struct WReport {
    GridField w;
    double l1_laplacian = 0.0;
    std::map<double, double> exp_integrals;            // lambda -> int e^{lambda w}
    std::map<double, double> grad_lp;                  // p -> |grad w|_p
    std::map<double, double> w1p;                      // p -> |w|_{W^{1,p}}
    std::map<std::pair<double, double>, double> prop_norms;  // (lambda, p) -> |e^{lw}-1|_{W^{1,p}}
    double boundary_flux = 0.0;                        // int_{S^1} d_n w
    std::map<double, double> mu;                       // lambda -> exp integral / pi

    double min_w = 0.0;         // min over all nodes of w
    double min_neg_lap_w = 0.0; // min over interior of -Lap(w)
    double max_boundary_w = 0.0;
};

WReport w_report(const ConformalFactor& u, const ComparisonSolution& sol,
                 const std::vector<double>& lambdas, const std::vector<double>& ps);

struct FluxCheck {
    double abs_flux = 0.0;
    double identity_gap = 0.0;   // | |Dw|_1 - |flux| |
    double gauss_bonnet_gap = 0.0;  // |flux - int (kappa_u - kappa_v) e^u|
};

FluxCheck check_flux(const WReport& report, const ConformalFactor& u,
                     const ComparisonSolution& sol);

struct BrezisMerleResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

/// Solves -Lap(wt) = f with zero boundary data and evaluates both sides of
/// the exponential-integrability inequality
///   int exp( (4 pi - delta)/|f|_1 * |wt| ) <= (4 pi^2 / delta) diam^2.
/// The f = 0 limit returns lhs = pi.
BrezisMerleResult brezis_merle_check(const GridField& f, double delta);

/// Max over the sample fields of |grad w|_p / |f|_1 for the zero-Dirichlet
/// Poisson solutions; the recorded constant asserts no growth across grids.
double green_gradient_bound_check(const std::vector<GridField>& fs, double p);

struct TraceResult {
    double trace_norm = 0.0;
    double volume_norm = 0.0;
    double ratio = 0.0;
};

/// L^p norm of f along a polyline (bicubic samples, composite midpoint rule)
/// against the W^{1,p} norm over the subdisk of radius `rcap` containing it.
TraceResult trace_check(const GridField& f, double p,
                        const std::vector<std::array<double, 2>>& polyline, double rcap);

}  // namespace capstab
