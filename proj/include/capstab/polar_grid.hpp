#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace capstab {

/// Staggered polar discretization of the closed unit disk.
///
/// Interior rings sit at r_i = (i + 1/2) * hr for i = 0..nr-1 with
/// hr = 1/(nr + 1/2), so the boundary ring r = 1 is exactly one radial step
/// beyond the last interior ring and the spacing is uniform everywhere.
/// There is no node at r = 0; stencils that would reach across the origin
/// use the diametrically opposite ray (theta + pi).
///
/// Node storage is radial-major: ring i occupies indices [i*ntheta,
/// (i+1)*ntheta), rings 0..nr-1 are interior and ring nr is the boundary.
struct PolarGrid {
    int nr = 0;
    int ntheta = 0;
    double hr = 0.0;
    double htheta = 0.0;

    PolarGrid() = default;

    PolarGrid(int nr_, int ntheta_) : nr(nr_), ntheta(ntheta_) {
        if (nr < 8) throw std::invalid_argument("PolarGrid: nr must be >= 8");
        if (ntheta < 8 || ntheta % 2 != 0)
            throw std::invalid_argument("PolarGrid: ntheta must be even and >= 8");
        hr = 1.0 / (nr + 0.5);
        htheta = 2.0 * M_PI / ntheta;
    }

    /// Worst spacing, the `h` in all h^2-scaled tolerances.
    double h() const { return std::max(hr, htheta); }

    /// Ring radius; ring nr is the boundary circle r = 1.
    double radius(int ring) const { return (ring + 0.5) * hr; }
    double theta(int j) const { return j * htheta; }

    int interior_count() const { return nr * ntheta; }
    int node_count() const { return (nr + 1) * ntheta; }

    int index(int ring, int j) const { return ring * ntheta + j; }
    int boundary_index(int j) const { return nr * ntheta + j; }

    int wrap(int j) const { return ((j % ntheta) + ntheta) % ntheta; }

    void node_xy(int ring, int j, double& x, double& y) const {
        const double r = ring == nr ? 1.0 : radius(ring);
        x = r * std::cos(theta(j));
        y = r * std::sin(theta(j));
    }

    /// Area quadrature weight of one interior node on ring i. Cells are the
    /// exact annular sectors [i*hr, (i+1)*hr] x htheta, except the last ring
    /// whose cell extends to r = 1, so the weights tile the disk exactly.
    double area_weight(int ring) const {
        if (ring < nr - 1) return radius(ring) * hr * htheta;
        const double a = (nr - 1) * hr;
        return 0.5 * (1.0 - a * a) * htheta;
    }

    /// Arc-length weight of one boundary node.
    double boundary_weight() const { return htheta; }

    bool operator==(const PolarGrid& o) const {
        return nr == o.nr && ntheta == o.ntheta;
    }
    bool operator!=(const PolarGrid& o) const { return !(*this == o); }
};

/// Scalar field sampled on a PolarGrid: nr*ntheta interior values followed by
/// the ntheta boundary-ring values.
struct GridField {
    PolarGrid grid;
    std::vector<double> values;

    GridField() = default;
    explicit GridField(const PolarGrid& g) : grid(g), values(g.node_count(), 0.0) {}
    GridField(const PolarGrid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != g.node_count())
            throw std::invalid_argument("GridField: values length does not match grid");
    }

    double& at(int ring, int j) { return values[grid.index(ring, j)]; }
    double at(int ring, int j) const { return values[grid.index(ring, j)]; }
    double& boundary(int j) { return values[grid.boundary_index(j)]; }
    double boundary(int j) const { return values[grid.boundary_index(j)]; }

    void assert_finite() const {
        for (double v : values)
            if (!std::isfinite(v)) throw std::invalid_argument("GridField: non-finite value");
    }
};

enum class Region { Interior, Boundary };

/// Samples f(x, y) at every node including the boundary ring.
GridField make_field(const PolarGrid& grid, const std::function<double(double, double)>& f);

/// Samples a radial profile f(r).
GridField make_radial_field(const PolarGrid& grid, const std::function<double(double)>& f);

GridField field_map(const GridField& f, const std::function<double(double)>& op);
GridField field_combine(const GridField& a, const GridField& b,
                        const std::function<double(double, double)>& op);

/// Second-order conservative polar Laplacian at interior nodes. The
/// boundary-ring entries of the result are zeroed and carry no meaning;
/// interior norms never touch them. The flux form (1/r) d(r f_r)/dr makes the
/// r = 0 coefficient vanish on the innermost ring, so no node ever reaches
/// across the origin.
GridField laplacian(const GridField& f);

/// One-sided second-order radial derivative df/dr on the boundary circle.
std::vector<double> normal_derivative(const GridField& f);

/// |grad f| from centered polar stencils; one-sided radially on the boundary
/// ring, mirrored across the origin on the innermost ring.
GridField gradient_magnitude(const GridField& f);

/// Quadrature-weighted L^p norm over the chosen region. p must be finite and
/// >= 1; use max_norm for the sup norm.
double lp_norm(const GridField& f, double p, Region region);
double max_norm(const GridField& f, Region region);

/// L^p norm restricted to the subdisk r <= rcap (interior measure).
double lp_norm_subdisk(const GridField& f, double p, double rcap);

/// W^{1,p} norm (f and |grad f| in L^p over the disk), p in [1, inf).
double w1p_norm(const GridField& f, double p);
double w1p_norm_subdisk(const GridField& f, double p, double rcap);

/// Integral of f over the disk (interior quadrature, compensated summation).
double integrate(const GridField& f);
/// Integral of f over the boundary circle.
double integrate_boundary(const GridField& f);

}  // namespace capstab
