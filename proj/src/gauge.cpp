#include "capstab/gauge.hpp"

#include <cmath>

#include "capstab/geodesy.hpp"
#include "capstab/poisson.hpp"

namespace capstab {

MobiusTransform::MobiusTransform(std::complex<double> a_, double theta_) : a(a_), theta(theta_) {
    if (std::abs(a) >= 1.0) throw std::invalid_argument("MobiusTransform: |a| must be < 1");
}

std::complex<double> MobiusTransform::apply(std::complex<double> z) const {
    return std::polar(1.0, theta) * (z - a) / (1.0 - std::conj(a) * z);
}

double MobiusTransform::derivative_modulus(std::complex<double> z) const {
    const double den = std::norm(1.0 - std::conj(a) * z);
    return (1.0 - std::norm(a)) / den;
}

MobiusTransform MobiusTransform::inverse() const {
    return MobiusTransform(-std::polar(1.0, theta) * a, -theta);
}

MobiusTransform compose(const MobiusTransform& m2, const MobiusTransform& m1) {
    // The composite is again a Blaschke map: its a is the preimage of 0 and
    // its rotation is the phase of the derivative there.
    const std::complex<double> a = m1.inverse().apply(m2.a);
    const std::complex<double> d2 = std::polar(1.0, m2.theta) /
                                    std::pow(1.0 - std::conj(m2.a) * m1.apply(a), 2) *
                                    (1.0 - std::norm(m2.a));
    const std::complex<double> d1 = std::polar(1.0, m1.theta) /
                                    std::pow(1.0 - std::conj(m1.a) * a, 2) *
                                    (1.0 - std::norm(m1.a));
    return MobiusTransform(a, std::arg(d2 * d1));
}

ConformalFactor pullback_factor(const ConformalFactor& f, const MobiusTransform& m) {
    const PolarGrid& g = f.grid();
    const PolarInterpolator interp(f.field);
    GridField out(g);
    for (int i = 0; i <= g.nr; ++i)
        for (int j = 0; j < g.ntheta; ++j) {
            double x, y;
            g.node_xy(i, j, x, y);
            const std::complex<double> w = m.apply({x, y});
            out.values[g.index(i, j)] =
                interp(w.real(), w.imag()) + std::log(m.derivative_modulus({x, y}));
        }
    return ConformalFactor::unchecked(std::move(out), f.c);
}

namespace {

// Incenter estimate: centroid of the near-maximal plateau of the
// distance-to-boundary field. Pure argmax wobbles within the flat top, the
// plateau centroid is stable to sub-node accuracy.
void incenter(const ConformalFactor& f, double& x, double& y) {
    const GeodesicGraph graph(f);
    const std::vector<double> dist = graph.distances_from_boundary();
    const PolarGrid& g = f.grid();
    double dmax = 0.0;
    for (int k = 0; k < g.interior_count(); ++k) dmax = std::max(dmax, dist[k]);
    const double band = g.h() * graph.max_conformal_scale();
    double sx = 0.0, sy = 0.0, sw = 0.0;
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.ntheta; ++j) {
            const int k = g.index(i, j);
            if (dist[k] >= dmax - band) {
                double px, py;
                g.node_xy(i, j, px, py);
                const double w = g.area_weight(i);
                sx += w * px;
                sy += w * py;
                sw += w;
            }
        }
    x = sx / sw;
    y = sy / sw;
}

}  // namespace

NormalizeResult normalize(const ConformalFactor& f) {
    const double tol = 2.0 * f.grid().h();
    MobiusTransform total = MobiusTransform::identity();
    ConformalFactor current = f;
    double offset = 0.0;
    for (int it = 0; it <= 10; ++it) {
        double cx, cy;
        incenter(current, cx, cy);
        offset = std::hypot(cx, cy);
        if (offset <= tol) return {total, std::move(current), offset, it};
        // phi_step(0) = incenter, so the pullback recenters it at the origin.
        const MobiusTransform step(std::complex<double>(-cx, -cy), 0.0);
        total = compose(total, step);
        // Resample from the original each round so interpolation error does
        // not compound.
        current = pullback_factor(f, total);
    }
    throw SolveFailure("normalize: incenter iteration did not converge", offset);
}

KernelConvergenceReport kernel_convergence_demo(double c, const std::vector<double>& psis,
                                                const std::vector<double>& radii,
                                                const PolarGrid& grid) {
    for (size_t i = 1; i < psis.size(); ++i)
        if (!(psis[i] < psis[i - 1]))
            throw std::invalid_argument("kernel_convergence_demo: psis must decrease");
    const CapParams cap = CapParams::make(c);
    KernelConvergenceReport rep;
    rep.radii = radii;
    rep.rate_constants.assign(radii.size(), 0.0);
    for (double psi : psis) {
        KernelConvergenceRow row;
        row.psi = psi;
        row.ell = psi == 0.0 ? cap.r_c : stereo_inball_radius(c, psi);
        // (rho_0)_{ell Id} = log(2 ell / (1 + ell^2 |x|^2)) in closed form.
        for (size_t ri = 0; ri < radii.size(); ++ri) {
            double gap = 0.0;
            for (int i = 0; i <= grid.nr; ++i) {
                const double r = i == grid.nr ? 1.0 : grid.radius(i);
                if (r > radii[ri]) continue;
                const double fk = std::log(2.0 * row.ell / (1.0 + row.ell * row.ell * r * r));
                gap = std::max(gap, std::abs(fk - rho_c_value(c, r, 0.0)));
            }
            row.gaps.push_back(gap);
            const double dl = std::abs(row.ell - cap.r_c);
            if (dl > 0.0)
                rep.rate_constants[ri] = std::max(rep.rate_constants[ri], gap / dl);
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace capstab
