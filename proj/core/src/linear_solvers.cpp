#include "afc1d/linear_solvers.hpp"

#include <cmath>
#include <stdexcept>

namespace afc {

namespace {

void check_pivot(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::runtime_error("mass solve: non-positive pivot, matrix is not SPD");
  }
}

// Dense LDL^T without pivoting; adequate for the tiny wrap-around systems.
std::vector<double> solve_dense_spd(std::vector<std::vector<double>> a,
                                    std::vector<double> x) {
  const int n = static_cast<int>(x.size());
  for (int k = 0; k < n; ++k) {
    check_pivot(a[k][k]);
    for (int i = k + 1; i < n; ++i) {
      const double f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      x[i] -= f * x[k];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= a[i][j] * x[j];
    x[i] /= a[i][i];
  }
  return x;
}

}  // namespace

std::vector<double> solve_tridiagonal_spd(std::span<const double> sub,
                                          std::span<const double> diag,
                                          std::span<const double> super,
                                          std::span<const double> rhs) {
  const std::size_t n = diag.size();
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> x(rhs.begin(), rhs.end());
  check_pivot(d[0]);
  for (std::size_t i = 1; i < n; ++i) {
    const double w = sub[i - 1] / d[i - 1];
    d[i] -= w * super[i - 1];
    x[i] -= w * x[i - 1];
    check_pivot(d[i]);
  }
  x[n - 1] /= d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    x[i] = (x[i] - super[i] * x[i + 1]) / d[i];
  }
  return x;
}

std::vector<double> solve_cyclic_tridiagonal_spd(std::span<const double> sub,
                                                 std::span<const double> diag,
                                                 std::span<const double> super,
                                                 double corner_tr, double corner_bl,
                                                 std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (n < 4) {
    throw std::invalid_argument("cyclic solve: need at least 4 unknowns");
  }
  // A = T + u v^T with u = (g, 0, ..., 0, corner_bl), v = (1, 0, ..., 0,
  // corner_tr / g); T is tridiagonal with the first and last diagonal
  // entries adjusted.
  const double g = -diag[0];
  std::vector<double> dmod(diag.begin(), diag.end());
  dmod[0] -= g;
  dmod[n - 1] -= corner_tr * corner_bl / g;

  std::vector<double> u(n, 0.0);
  u[0] = g;
  u[n - 1] = corner_bl;

  const std::vector<double> y = solve_tridiagonal_spd(sub, dmod, super, rhs);
  const std::vector<double> z = solve_tridiagonal_spd(sub, dmod, super, u);

  const double vy = y[0] + corner_tr / g * y[n - 1];
  const double vz = z[0] + corner_tr / g * z[n - 1];
  const double factor = vy / (1.0 + vz);

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = y[i] - factor * z[i];
  return x;
}

std::vector<double> mass_solve(const SparseOperator& Mc, std::span<const double> rhs,
                               BoundaryKind boundary) {
  const int n = Mc.rows();
  if (boundary == BoundaryKind::Periodic && n < 4) {
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
      auto cols = Mc.row_cols(i);
      auto vals = Mc.row_values(i);
      for (std::size_t k = 0; k < cols.size(); ++k) a[i][cols[k]] = vals[k];
    }
    return solve_dense_spd(std::move(a), std::vector<double>(rhs.begin(), rhs.end()));
  }

  std::vector<double> sub(n - 1), diag(n), super(n - 1);
  for (int i = 0; i < n; ++i) diag[i] = Mc.at(i, i);
  for (int i = 0; i + 1 < n; ++i) {
    super[i] = Mc.at(i, i + 1);
    sub[i] = Mc.at(i + 1, i);
  }
  if (boundary == BoundaryKind::Periodic) {
    return solve_cyclic_tridiagonal_spd(sub, diag, super, Mc.at(0, n - 1),
                                        Mc.at(n - 1, 0), rhs);
  }
  return solve_tridiagonal_spd(sub, diag, super, rhs);
}

}  // namespace afc
