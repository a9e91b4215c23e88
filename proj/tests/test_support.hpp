#pragma once

#include <cmath>
#include <vector>

#include "afc1d/assembly.hpp"
#include "afc1d/fields.hpp"
#include "afc1d/rng.hpp"

namespace afc::test {

inline std::vector<double> random_vector(SplitMix64& rng, int n, double lo = -1.0,
                                         double hi = 1.0) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.next_in(lo, hi);
  return v;
}

inline NodalField random_field(SplitMix64& rng, int n, double lo = -1.0,
                               double hi = 1.0) {
  NodalField f;
  f.values = random_vector(rng, n, lo, hi);
  return f;
}

// Dense copy of a sparse operator, for solver and form oracles.
inline std::vector<std::vector<double>> dense(const SparseOperator& M) {
  std::vector<std::vector<double>> a(M.rows(), std::vector<double>(M.rows(), 0.0));
  for (int i = 0; i < M.rows(); ++i) {
    auto cols = M.row_cols(i);
    auto vals = M.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) a[i][cols[k]] = vals[k];
  }
  return a;
}

// Directed-sum evaluation of the limited diffusive form
// sum_i z_i sum_{j != i} (1 - alpha_ij) d_ij (w_i - w_j), with the per-edge
// factors expanded to a symmetric dense table. Independent of the edge-based
// implementation path.
inline double directed_form_d(const std::vector<double>& alpha,
                              const SystemOperators& ops,
                              const std::vector<double>& w,
                              const std::vector<double>& z) {
  const int n = ops.size();
  std::vector<std::vector<double>> af(n, std::vector<double>(n, 0.0));
  for (std::size_t e = 0; e < ops.edges.size(); ++e) {
    af[ops.edges[e].i][ops.edges[e].j] = alpha[e];
    af[ops.edges[e].j][ops.edges[e].i] = alpha[e];
  }
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    auto cols = ops.D.row_cols(i);
    auto vals = ops.D.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const int j = cols[k];
      if (j == i) continue;
      s += z[i] * (1.0 - af[i][j]) * vals[k] * (w[i] - w[j]);
    }
  }
  return s;
}

inline double directed_form_m(const std::vector<double>& factor,
                              const SystemOperators& ops,
                              const std::vector<double>& w,
                              const std::vector<double>& z) {
  const int n = ops.size();
  std::vector<std::vector<double>> mf(n, std::vector<double>(n, 0.0));
  for (std::size_t e = 0; e < ops.edges.size(); ++e) {
    mf[ops.edges[e].i][ops.edges[e].j] = factor[e];
    mf[ops.edges[e].j][ops.edges[e].i] = factor[e];
  }
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    auto cols = ops.Mc.row_cols(i);
    auto vals = ops.Mc.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const int j = cols[k];
      if (j == i) continue;
      s += z[i] * mf[i][j] * vals[k] * (w[i] - w[j]);
    }
  }
  return s;
}

}  // namespace afc::test
