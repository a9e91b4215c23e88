#include "afc1d/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "afc1d/diagnostics.hpp"
#include "afc1d/linear_solvers.hpp"

namespace afc {

void SchemeConfig::validate() const {
  if (!(omega >= 0.0 && omega <= 1.0)) {
    throw std::invalid_argument("SchemeConfig: omega must lie in [0, 1]");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("SchemeConfig: gamma must lie in (0, 1)");
  }
}

namespace {

bool uses_flux_potentials(SchemeKind k) {
  return k == SchemeKind::GS || k == SchemeKind::MCL || k == SchemeKind::CE;
}

NodalField flux_potentials(const NodalField& u, const SchemeConfig& cfg,
                           const SystemOperators& ops, std::span<const double> b) {
  if (!uses_flux_potentials(cfg.kind)) {
    return NodalField(u.size(), 0.0, u.time);
  }
  NodalField udot = advective_potential(u, ops, b);
  const NodalField ud =
      cfg.stabilization == StabilizationVariant::LowOrder
          ? dissipative_potential_loworder(u, ops, cfg.omega)
          : dissipative_potential_biharmonic(u, ops, cfg.omega);
  for (std::size_t i = 0; i < udot.size(); ++i) udot[i] += ud[i];
  return udot;
}

// Fills fStar/fFinal and the correction factors of `edges` for the
// edge-based schemes. Returns the limiter report for CE, a default one
// otherwise.
CoercivityReport limit_edges(const SchemeConfig& cfg, const NodalField& u,
                             const NodalField& udot, const SystemOperators& ops,
                             double uin_value, double h, EdgeFluxSet& edges) {
  raw_fluxes(u, udot, ops, edges);
  switch (cfg.kind) {
    case SchemeKind::LF:
      // All antidiffusion removed.
      std::fill(edges.fStar.begin(), edges.fStar.end(), 0.0);
      std::fill(edges.fFinal.begin(), edges.fFinal.end(), 0.0);
      std::fill(edges.alpha.begin(), edges.alpha.end(), 0.0);
      std::fill(edges.alphaDot.begin(), edges.alphaDot.end(), 0.0);
      std::fill(edges.alphaDotMinus.begin(), edges.alphaDotMinus.end(), 0.0);
      return {};
    case SchemeKind::GS:
      for (std::size_t e = 0; e < edges.size(); ++e) {
        edges.fStar[e] = edges.fD[e] + edges.fM[e];
        edges.fFinal[e] = edges.fStar[e];
        edges.alpha[e] = 1.0;
        edges.alphaDot[e] = 1.0;
        edges.alphaDotMinus[e] = 1.0;
      }
      return {};
    case SchemeKind::MCL:
    case SchemeKind::MC0: {
      bar_states(u, ops, edges);
      const LocalBounds bounds = local_bounds(u, ops, uin_value);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const Edge& ed = ops.edges[e];
        if (edges.degenerate[e]) continue;
        const double d = ops.D.value(ed.off_ij);
        const double f = edges.fD[e] + edges.fM[e];
        const double fStar =
            mcl_limit(f, edges.barIJ[e], edges.barJI[e], bounds.lo[ed.i],
                      bounds.hi[ed.i], bounds.lo[ed.j], bounds.hi[ed.j], d);
        edges.fStar[e] = fStar;
        edges.fFinal[e] = fStar;
        const double a = f != 0.0 ? fStar / f : 0.0;
        edges.alpha[e] = a;
        edges.alphaDot[e] = a;
        edges.alphaDotMinus[e] = cfg.kind == SchemeKind::MCL ? a : 0.0;
      }
      return {};
    }
    case SchemeKind::CE: {
      bar_states(u, ops, edges);
      const LocalBounds bounds = local_bounds(u, ops, uin_value);
      return ce_limit(edges, bounds, ops, u, udot, cfg.gamma, h);
    }
    default:
      throw std::invalid_argument("limit_edges: not an edge-based scheme");
  }
}

// du_i = b_i + sum_j (d_ij - a_ij) u_j, the low-order row part shared by
// every flux-corrected scheme.
void low_order_rows(const NodalField& u, const SystemOperators& ops,
                    std::span<const double> b, std::span<double> du) {
  for (int i = 0; i < ops.size(); ++i) {
    double s = b[i];
    auto cols = ops.A.row_cols(i);
    auto avals = ops.A.row_values(i);
    auto dvals = ops.D.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      s += (dvals[k] - avals[k]) * u[cols[k]];
    }
    du[i] = s;
  }
}

}  // namespace

NodalField scheme_rhs(const NodalField& u, double t, const SchemeConfig& cfg,
                      const SystemOperators& ops, const Mesh1D& mesh,
                      const InflowDatum& u_in, RhsDiagnostics* diag) {
  cfg.validate();
  const int n = ops.size();
  if (static_cast<int>(u.size()) != n) {
    throw std::invalid_argument("scheme_rhs: state size mismatch");
  }
  const double uin_value = u_in ? u_in(t) : 0.0;
  const std::vector<double> b = ops.inflow.assemble(n, uin_value);
  NodalField out(n, 0.0, t);

  if (cfg.kind == SchemeKind::GC) {
    std::vector<double> r(n);
    ops.A.apply(u.values, r);
    for (int i = 0; i < n; ++i) r[i] = b[i] - r[i];
    out.values = mass_solve(ops.Mc, r, mesh.boundary());
    if (diag) diag->hasGcc = false;
    return out;
  }

  const NodalField udot = flux_potentials(u, cfg, ops, b);
  EdgeFluxSet edges = make_edge_flux_set(ops);
  const double h = mesh.max_spacing();
  const CoercivityReport ce_report =
      limit_edges(cfg, u, udot, ops, uin_value, h, edges);

  low_order_rows(u, ops, b, out.values);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& ed = ops.edges[e];
    out[ed.i] += edges.fFinal[e];
    out[ed.j] -= edges.fFinal[e];
  }
  for (int i = 0; i < n; ++i) out[i] /= ops.mL[i];

  if (diag) {
    diag->hasGcc = true;
    if (cfg.kind == SchemeKind::CE) {
      diag->gcc = ce_report;
    } else {
      CoercivityReport r;
      const auto [lhs, rhs] = gcc_residual(edges, u, udot, ops, cfg.gamma, h);
      r.gccLhs = lhs;
      r.gccRhs = rhs;
      r.satisfied = lhs <= rhs + gcc_tolerance(udot, ops);
      diag->gcc = r;
    }
    const auto [ab, adb] = overall_factors(edges, u, udot, ops);
    diag->alphaBar = ab;
    diag->alphaDotBar = adb;
  }
  return out;
}

double equivalence_check(const NodalField& u, double t, const SchemeConfig& cfg,
                         const SystemOperators& ops, const Mesh1D& mesh,
                         const InflowDatum& u_in) {
  if (cfg.kind != SchemeKind::MCL && cfg.kind != SchemeKind::MC0 &&
      cfg.kind != SchemeKind::CE) {
    throw std::invalid_argument("equivalence_check: needs a flux-corrected scheme");
  }
  cfg.validate();
  const int n = ops.size();
  const double uin_value = u_in ? u_in(t) : 0.0;
  const std::vector<double> b = ops.inflow.assemble(n, uin_value);
  const NodalField udot = flux_potentials(u, cfg, ops, b);
  EdgeFluxSet edges = make_edge_flux_set(ops);
  limit_edges(cfg, u, udot, ops, uin_value, mesh.max_spacing(), edges);

  // Flux form.
  std::vector<double> duA(n, 0.0);
  low_order_rows(u, ops, b, duA);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& ed = ops.edges[e];
    duA[ed.i] += edges.fFinal[e];
    duA[ed.j] -= edges.fFinal[e];
  }

  // Bar-state form with the limited bar states.
  std::vector<double> duB(n, 0.0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& ed = ops.edges[e];
    const double aij = ops.A.value(ed.off_ij);
    const double aji = ops.A.value(ed.off_ji);
    if (edges.degenerate[e]) {
      duB[ed.i] += -aij * (u[ed.j] - u[ed.i]);
      duB[ed.j] += -aji * (u[ed.i] - u[ed.j]);
      continue;
    }
    const double d = ops.D.value(ed.off_ij);
    const double barF_ij = edges.barIJ[e] + edges.fFinal[e] / (2.0 * d);
    const double barF_ji = edges.barJI[e] - edges.fFinal[e] / (2.0 * d);
    duB[ed.i] += 2.0 * d * (barF_ij - u[ed.i]);
    duB[ed.j] += 2.0 * d * (barF_ji - u[ed.j]);
  }
  for (const auto& p : ops.inflow.points) {
    duB[p.dof] += p.weight * (uin_value - u[p.dof]);
  }

  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(duA[i] - duB[i]) / ops.mL[i]);
  }
  return worst;
}

}  // namespace afc
