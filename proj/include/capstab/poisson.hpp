#pragma once

#include "capstab/polar_grid.hpp"

namespace capstab {

struct SolveFailure : std::runtime_error {
    SolveFailure(const std::string& what, double residual_)
        : std::runtime_error(what), residual(residual_) {}
    double residual;
};

/// Solves (Lap - diag(shift)) x = rhs at interior nodes with Dirichlet data
/// taken from the boundary ring of `dirichlet`. `shift` and `rhs` are read at
/// interior nodes only. Returns the full field (boundary ring copied from the
/// data). The system is row-scaled by the ring radii, which makes it
/// symmetric; LDLT is tried first with an LU fallback.
GridField solve_helmholtz(const PolarGrid& grid, const std::vector<double>& shift,
                          const std::vector<double>& rhs, const GridField& dirichlet);

/// Zero-Dirichlet Poisson solve -Lap(w) = f.
GridField solve_poisson_zero_bc(const GridField& f);

}  // namespace capstab
