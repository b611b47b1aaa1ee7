#include "capstab/poisson.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>

namespace capstab {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

// Assembles row r_i * (Lap - diag(shift)) over interior unknowns; boundary
// couplings of the last ring go to the right-hand side. The radial flux form
// is symmetric under this row scaling.
void assemble(const PolarGrid& g, const std::vector<double>& shift,
              const std::vector<double>& rhs_in, const GridField& dirichlet, SpMat& A,
              Eigen::VectorXd& b) {
    const int n = g.interior_count();
    const int nt = g.ntheta;
    std::vector<Triplet> trip;
    trip.reserve(static_cast<size_t>(n) * 5);
    b.resize(n);
    for (int i = 0; i < g.nr; ++i) {
        const double ri = g.radius(i);
        const double rp = (i + 1) * g.hr;
        const double rm = i * g.hr;
        const double cr = 1.0 / (g.hr * g.hr);
        const double ct = 1.0 / (ri * g.htheta * g.htheta);
        for (int j = 0; j < nt; ++j) {
            const int row = g.index(i, j);
            double diag = -(rp + rm) * cr - 2.0 * ct - ri * shift[row];
            b(row) = ri * rhs_in[row];
            if (i + 1 < g.nr)
                trip.emplace_back(row, g.index(i + 1, j), rp * cr);
            else
                b(row) -= rp * cr * dirichlet.boundary(j);
            if (i == 0) {
                // Across-origin coefficient rm vanishes on the innermost ring.
            } else {
                trip.emplace_back(row, g.index(i - 1, j), rm * cr);
            }
            trip.emplace_back(row, g.index(i, g.wrap(j + 1)), ct);
            trip.emplace_back(row, g.index(i, g.wrap(j - 1)), ct);
            trip.emplace_back(row, row, diag);
        }
    }
    A.resize(n, n);
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();
}

}  // namespace

GridField solve_helmholtz(const PolarGrid& grid, const std::vector<double>& shift,
                          const std::vector<double>& rhs, const GridField& dirichlet) {
    SpMat A;
    Eigen::VectorXd b;
    assemble(grid, shift, rhs, dirichlet, A, b);

    Eigen::VectorXd x;
    Eigen::SimplicialLDLT<SpMat> ldlt(A);
    bool ok = ldlt.info() == Eigen::Success;
    if (ok) {
        x = ldlt.solve(b);
        ok = ldlt.info() == Eigen::Success && x.allFinite();
    }
    if (!ok) {
        Eigen::SparseLU<SpMat> lu(A);
        if (lu.info() != Eigen::Success)
            throw SolveFailure("linear solve breakdown: factorization failed", 0.0);
        x = lu.solve(b);
        if (lu.info() != Eigen::Success || !x.allFinite())
            throw SolveFailure("linear solve breakdown: back substitution failed", 0.0);
    }

    GridField out(grid);
    for (int k = 0; k < grid.interior_count(); ++k) out.values[k] = x(k);
    for (int j = 0; j < grid.ntheta; ++j) out.boundary(j) = dirichlet.boundary(j);
    return out;
}

GridField solve_poisson_zero_bc(const GridField& f) {
    const PolarGrid& g = f.grid;
    std::vector<double> shift(g.interior_count(), 0.0);
    std::vector<double> rhs(g.interior_count());
    for (int k = 0; k < g.interior_count(); ++k) rhs[k] = -f.values[k];
    GridField zero(g);
    return solve_helmholtz(g, shift, rhs, zero);
}

}  // namespace capstab
