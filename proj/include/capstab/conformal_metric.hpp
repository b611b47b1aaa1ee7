#pragma once

#include <optional>
#include <string>

#include "capstab/model_cap.hpp"
#include "capstab/polar_grid.hpp"

namespace capstab {

/// Thrown when a constructed metric fails the pointwise curvature conditions
/// K >= 1 in the disk or kappa >= c on the circle.
struct AdmissibilityError : std::runtime_error {
    AdmissibilityError(const std::string& what, int node, double margin_)
        : std::runtime_error(what), worst_node(node), margin(margin_) {}
    int worst_node;  // flat node index of the worst violation
    double margin;   // most negative slack observed
};

/// Conformal factor u for the metric e^{2u} g_euc on the disk, together with
/// the boundary-convexity constant c it claims. Admissibility (K >= 1,
/// kappa >= c) is checked numerically at construction via `verified`; raw
/// fields (boundary data for the solver, test inputs) use `unchecked`.
struct ConformalFactor {
    GridField field;
    double c = 1.0;

    static ConformalFactor unchecked(GridField f, double c);

    /// Verifies K >= 1 - tol and kappa >= c - tol at every node and throws
    /// AdmissibilityError otherwise. The default tol absorbs roundoff only;
    /// fields sampled from smooth extremal metrics need an O(h^2) tolerance
    /// because the discrete curvature of an exact extremizer dips below the
    /// analytic value by truncation error.
    static ConformalFactor verified(GridField f, double c, double tol_k = 1e-6);

    const PolarGrid& grid() const { return field.grid; }
};

/// Curvature slack that scales with the discretization, 10 h^2.
double admissibility_slack(const PolarGrid& grid);

/// Gaussian curvature K = -Lap(u) e^{-2u} at interior nodes.
GridField gaussian_curvature(const ConformalFactor& u);

/// Geodesic curvature of the boundary circle, kappa = (d_n u + 1) e^{-u}.
std::vector<double> boundary_curvature(const ConformalFactor& u);

/// Length of the boundary circle in the metric, integral of e^u.
double boundary_length(const ConformalFactor& u);

/// Area of the disk in the metric, integral of e^{2u}.
double area(const ConformalFactor& u);

/// |int K dA + int kappa ds - 2 pi|.
double gauss_bonnet_residual(const ConformalFactor& u);

/// The model cap as a ConformalFactor (kappa = c, K = 1).
ConformalFactor model_cap_factor(double c, const PolarGrid& grid);

/// Member of the canonical near-extremal family: u = rho_{c'} - log(1+eta)/2
/// with c' = c/sqrt(1+eta). Analytically K = 1+eta and kappa = c, and the
/// boundary length is 2*pi/sqrt(1+eta+c^2).
struct EtaMember {
    ConformalFactor factor;
    double eta = 0.0;
    double epsilon = 0.0;  // 1 - sqrt(1+c^2)/sqrt(1+eta+c^2), the length deficit
};

EtaMember eta_family(double c, double eta, const PolarGrid& grid);

double eta_family_boundary_length(double c, double eta);
double eta_family_epsilon(double c, double eta);

/// Eta-family member perturbed by a compactly supported smooth bump
/// t * psi(|x - center| / width). The constructor verifies admissibility
/// numerically and throws AdmissibilityError when the perturbation pushes
/// K below 1 (or kappa below c) anywhere.
ConformalFactor bump_family(double c, double eta, double amplitude, double center_x,
                            double center_y, double width, const PolarGrid& grid);

}  // namespace capstab
