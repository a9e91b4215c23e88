#pragma once

#include <span>
#include <vector>

#include "afc1d/mesh.hpp"
#include "afc1d/sparse.hpp"

namespace afc {

// Thomas algorithm for a symmetric positive definite tridiagonal system.
// sub and super have length n-1. Throws std::runtime_error on a
// non-positive pivot.
std::vector<double> solve_tridiagonal_spd(std::span<const double> sub,
                                          std::span<const double> diag,
                                          std::span<const double> super,
                                          std::span<const double> rhs);

// Cyclic tridiagonal solve via the Sherman-Morrison rank-one update of a
// plain tridiagonal factorization. corner_tr = A(0, n-1), corner_bl =
// A(n-1, 0). Requires n >= 4 so the corners are distinct from the bands.
std::vector<double> solve_cyclic_tridiagonal_spd(std::span<const double> sub,
                                                 std::span<const double> diag,
                                                 std::span<const double> super,
                                                 double corner_tr, double corner_bl,
                                                 std::span<const double> rhs);

// Direct solve of Mc x = r. Uses the tridiagonal factorization for
// inflow-outflow meshes and the cyclic variant for periodic ones (dense
// LDL^T below four unknowns, where the wrap entries merge with the bands).
std::vector<double> mass_solve(const SparseOperator& Mc, std::span<const double> rhs,
                               BoundaryKind boundary);

}  // namespace afc
