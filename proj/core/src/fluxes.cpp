#include "afc1d/fluxes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace afc {

void EdgeFluxSet::resize(std::size_t n) {
  fD.assign(n, 0.0);
  fM.assign(n, 0.0);
  barIJ.assign(n, 0.0);
  barJI.assign(n, 0.0);
  fStar.assign(n, 0.0);
  fDotPre.assign(n, 0.0);
  fDotStar.assign(n, 0.0);
  fFinal.assign(n, 0.0);
  alpha.assign(n, 0.0);
  alphaDot.assign(n, 0.0);
  alphaDotMinus.assign(n, 0.0);
  degenerate.assign(n, 0);
  alphaPlus = 1.0;
  alphaMinus = 1.0;
}

EdgeFluxSet make_edge_flux_set(const SystemOperators& ops) {
  EdgeFluxSet e;
  e.resize(ops.edges.size());
  return e;
}

NodalField advective_potential(const NodalField& u, const SystemOperators& ops,
                               std::span<const double> b) {
  const int n = ops.size();
  NodalField out(n, 0.0, u.time);
  for (int i = 0; i < n; ++i) {
    double s = b[i];
    auto cols = ops.A.row_cols(i);
    auto vals = ops.A.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      s -= vals[k] * u[cols[k]];
    }
    out[i] = s / ops.mL[i];
  }
  return out;
}

NodalField dissipative_potential_loworder(const NodalField& u,
                                          const SystemOperators& ops, double omega) {
  const int n = ops.size();
  NodalField out(n, 0.0, u.time);
  if (omega == 0.0) return out;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    auto cols = ops.D.row_cols(i);
    auto vals = ops.D.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] == i) continue;
      s += vals[k] * (u[cols[k]] - u[i]);
    }
    out[i] = omega * s / ops.mL[i];
  }
  return out;
}

std::vector<double> biharmonic_beta(const SystemOperators& ops) {
  const int n = ops.size();
  std::vector<double> beta(n, 0.0);
  for (int l = 0; l < n; ++l) {
    double dmax = 0.0;
    double mmin = std::numeric_limits<double>::infinity();
    auto dcols = ops.D.row_cols(l);
    auto dvals = ops.D.row_values(l);
    for (std::size_t k = 0; k < dcols.size(); ++k) {
      if (dcols[k] == l) continue;
      dmax = std::max(dmax, dvals[k]);
    }
    auto mcols = ops.Mc.row_cols(l);
    auto mvals = ops.Mc.row_values(l);
    for (std::size_t k = 0; k < mcols.size(); ++k) {
      if (mcols[k] == l) continue;
      mmin = std::min(mmin, mvals[k]);
    }
    beta[l] = std::sqrt(dmax / mmin);
  }
  return beta;
}

NodalField dissipative_potential_biharmonic(const NodalField& u,
                                            const SystemOperators& ops,
                                            double omega) {
  const int n = ops.size();
  NodalField out(n, 0.0, u.time);
  if (omega == 0.0) return out;
  const std::vector<double> beta = biharmonic_beta(ops);
  std::vector<double> lap(n, 0.0);  // discrete Laplacians Delta_l(u)
  for (int l = 0; l < n; ++l) {
    double s = 0.0;
    auto cols = ops.Mc.row_cols(l);
    auto vals = ops.Mc.row_values(l);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] == l) continue;
      s += vals[k] * (u[cols[k]] - u[l]);
    }
    lap[l] = s / ops.mL[l];
  }
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    auto cols = ops.Mc.row_cols(i);
    auto vals = ops.Mc.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      s += vals[k] * beta[cols[k]] * lap[cols[k]];
    }
    out[i] = omega * beta[i] * s / ops.mL[i];
  }
  return out;
}

void raw_fluxes(const NodalField& u, const NodalField& udot,
                const SystemOperators& ops, EdgeFluxSet& edges) {
  if (edges.size() != ops.edges.size()) edges.resize(ops.edges.size());
  for (std::size_t e = 0; e < ops.edges.size(); ++e) {
    const Edge& ed = ops.edges[e];
    const double d = ops.D.value(ed.off_ij);
    if (d <= 0.0) {
      edges.degenerate[e] = 1;
      edges.fD[e] = 0.0;
      edges.fM[e] = 0.0;
      continue;
    }
    edges.degenerate[e] = 0;
    edges.fD[e] = d * (u[ed.i] - u[ed.j]);
    edges.fM[e] = ops.Mc.value(ed.off_ij) * (udot[ed.i] - udot[ed.j]);
  }
}

void bar_states(const NodalField& u, const SystemOperators& ops, EdgeFluxSet& edges) {
  if (edges.size() != ops.edges.size()) edges.resize(ops.edges.size());
  for (std::size_t e = 0; e < ops.edges.size(); ++e) {
    const Edge& ed = ops.edges[e];
    const double d = ops.D.value(ed.off_ij);
    const double mid = 0.5 * (u[ed.i] + u[ed.j]);
    if (d <= 0.0) {
      edges.degenerate[e] = 1;
      edges.barIJ[e] = mid;
      edges.barJI[e] = mid;
      continue;
    }
    const double aij = ops.A.value(ed.off_ij);
    const double aji = ops.A.value(ed.off_ji);
    edges.barIJ[e] = mid - aij * (u[ed.j] - u[ed.i]) / (2.0 * d);
    edges.barJI[e] = mid - aji * (u[ed.i] - u[ed.j]) / (2.0 * d);
  }
}

LocalBounds local_bounds(const NodalField& u, const SystemOperators& ops,
                         double uin_value) {
  const int n = ops.size();
  LocalBounds b;
  b.lo.resize(n);
  b.hi.resize(n);
  for (int i = 0; i < n; ++i) {
    double lo = u[i];
    double hi = u[i];
    for (int j : ops.Mc.row_cols(i)) {
      lo = std::min(lo, u[j]);
      hi = std::max(hi, u[j]);
    }
    b.lo[i] = lo;
    b.hi[i] = hi;
  }
  for (const auto& p : ops.inflow.points) {
    b.lo[p.dof] = std::min(b.lo[p.dof], uin_value);
    b.hi[p.dof] = std::max(b.hi[p.dof], uin_value);
  }
  return b;
}

}  // namespace afc
