#pragma once

#include <complex>
#include <vector>

#include "capstab/conformal_metric.hpp"
#include "capstab/interpolate.hpp"

namespace capstab {

/// Disk automorphism z -> e^{i theta} (z - a) / (1 - conj(a) z), |a| < 1.
struct MobiusTransform {
    std::complex<double> a{0.0, 0.0};
    double theta = 0.0;

    MobiusTransform() = default;
    MobiusTransform(std::complex<double> a_, double theta_);

    std::complex<double> apply(std::complex<double> z) const;
    double derivative_modulus(std::complex<double> z) const;

    MobiusTransform inverse() const;
    static MobiusTransform identity() { return MobiusTransform{}; }
};

/// Composition: compose(m2, m1) maps z to m2(m1(z)).
MobiusTransform compose(const MobiusTransform& m2, const MobiusTransform& m1);

/// Gauge action (f)_phi = f o phi + log|phi'| resampled on the grid by
/// bicubic interpolation. The declared c is unchanged (the action is an
/// isometry).
ConformalFactor pullback_factor(const ConformalFactor& f, const MobiusTransform& m);

struct NormalizeResult {
    MobiusTransform transform;
    ConformalFactor factor;
    double final_offset = 0.0;
    int iterations = 0;
};

/// Moves the intrinsic incenter (node attaining the inradius) to the origin
/// by iterating locate-and-recenter with a-only transforms; the rotation is
/// left unfixed. Throws SolveFailure after 10 iterations without reaching
/// offset <= 2h.
NormalizeResult normalize(const ConformalFactor& f);

/// Explicit-family demonstration of kernel convergence: for the scaled
/// identity maps F = ell(c, psi) * Id onto the disks B_ell, the induced
/// factors converge to rho_c on every compact subdisk at rate |ell - R_c|.
struct KernelConvergenceRow {
    double psi = 0.0;
    double ell = 0.0;
    std::vector<double> gaps;  // max-norm gap to rho_c on each requested subdisk
};

struct KernelConvergenceReport {
    std::vector<double> radii;
    std::vector<KernelConvergenceRow> rows;
    std::vector<double> rate_constants;  // per radius: max over rows of gap/|ell - R_c|
};

KernelConvergenceReport kernel_convergence_demo(double c, const std::vector<double>& psis,
                                                const std::vector<double>& radii,
                                                const PolarGrid& grid);

}  // namespace capstab
