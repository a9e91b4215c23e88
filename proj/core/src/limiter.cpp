#include "afc1d/limiter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace afc {

std::string CoercivityReport::csv_header() {
  return "P_plus,P_minus,Q,D,alpha_plus,alpha_minus,gcc_lhs,gcc_rhs,satisfied";
}

std::string CoercivityReport::csv_row() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d", Pplus,
                Pminus, Q, Dval, alphaPlus, alphaMinus, gccLhs, gccRhs,
                satisfied ? 1 : 0);
  return buf;
}

double minmod(double a, double b) {
  if (a * b > 0.0) return std::min(a, b);
  if (a * b < 0.0) return std::max(a, b);
  return 0.0;
}

double mcl_limit(double f, double bar_ij, double bar_ji, double lo_i, double hi_i,
                 double lo_j, double hi_j, double d) {
  if (f == 0.0 || d <= 0.0) return 0.0;
  if (f > 0.0) {
    const double cap =
        std::min(2.0 * d * (hi_i - bar_ij), 2.0 * d * (bar_ji - lo_j));
    return std::clamp(std::min(f, cap), 0.0, f);
  }
  const double cap =
      std::max(2.0 * d * (lo_i - bar_ij), 2.0 * d * (bar_ji - hi_j));
  return std::clamp(std::max(f, cap), f, 0.0);
}

double alpha_plus_formula(double Pplus, double Q, double Dval, double gamma) {
  if (Q <= 0.0) return 1.0;
  const double r = Pplus / (2.0 * gamma * Q);
  const double disc = r * r + (1.0 - gamma) * std::max(Dval, 0.0) / (gamma * Q);
  return std::min(1.0, r + std::sqrt(disc));
}

double alpha_minus_formula(double alphaPlus, double Pplus, double Pminus, double Q,
                           double Dval, double gamma) {
  if (Pminus >= 0.0 || alphaPlus <= 0.0) return 1.0;
  const double num =
      (alphaPlus * gamma * Q - Pplus) * alphaPlus - (1.0 - gamma) * Dval;
  return std::clamp(num / (alphaPlus * Pminus), 0.0, 1.0);
}

double nonlinear_form_d(std::span<const double> alpha, const SystemOperators& ops,
                        std::span<const double> w, std::span<const double> z) {
  double s = 0.0;
  for (std::size_t e = 0; e < ops.edges.size(); ++e) {
    const Edge& ed = ops.edges[e];
    const double d = ops.D.value(ed.off_ij);
    s += (1.0 - alpha[e]) * d * (w[ed.i] - w[ed.j]) * (z[ed.i] - z[ed.j]);
  }
  return s;
}

double nonlinear_form_m(std::span<const double> factor, const SystemOperators& ops,
                        std::span<const double> w, std::span<const double> z) {
  double s = 0.0;
  for (std::size_t e = 0; e < ops.edges.size(); ++e) {
    const Edge& ed = ops.edges[e];
    const double m = ops.Mc.value(ed.off_ij);
    s += factor[e] * m * (w[ed.i] - w[ed.j]) * (z[ed.i] - z[ed.j]);
  }
  return s;
}

double gcc_tolerance(const NodalField& udot, const SystemOperators& ops) {
  double scale = 0.0;
  for (const Edge& ed : ops.edges) {
    const double du = udot[ed.i] - udot[ed.j];
    scale += ops.Mc.value(ed.off_ij) * du * du;
  }
  return 1e-12 * scale;
}

std::pair<double, double> gcc_residual(const EdgeFluxSet& edges, const NodalField& u,
                                       const NodalField& udot,
                                       const SystemOperators& ops, double gamma,
                                       double h) {
  double mh_dot_dot = 0.0;  // mass form tested with udot twice
  double mh_dot_u = 0.0;    // mass form tested with udot and u
  double dh = 0.0;
  for (std::size_t e = 0; e < ops.edges.size(); ++e) {
    const Edge& ed = ops.edges[e];
    if (edges.degenerate[e]) continue;
    const double m = ops.Mc.value(ed.off_ij);
    const double d = ops.D.value(ed.off_ij);
    const double ddot = udot[ed.i] - udot[ed.j];
    const double du = u[ed.i] - u[ed.j];
    mh_dot_dot += edges.alphaDotMinus[e] * m * ddot * ddot;
    mh_dot_u += edges.alphaDotMinus[e] * m * ddot * du;
    dh += (1.0 - edges.alpha[e]) * d * du * du;
  }
  const double ap = edges.alphaPlus;
  const double lhs =
      ops.lambda > 0.0 ? gamma * h / ops.lambda * ap * ap * mh_dot_dot : 0.0;
  const double rhs = (1.0 - gamma) * dh - ap * mh_dot_u;
  return {lhs, rhs};
}

CoercivityReport ce_limit(EdgeFluxSet& edges, const LocalBounds& bounds,
                          const SystemOperators& ops, const NodalField& u,
                          const NodalField& udot, double gamma, double h) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("ce_limit: gamma must lie in (0, 1)");
  }
  const std::size_t ne = ops.edges.size();
  if (edges.size() != ne) {
    throw std::invalid_argument("ce_limit: edge set size mismatch");
  }

  double Pplus = 0.0, Pminus = 0.0, Q = 0.0, Dval = 0.0;
  for (std::size_t e = 0; e < ne; ++e) {
    const Edge& ed = ops.edges[e];
    if (edges.degenerate[e]) {
      edges.fStar[e] = 0.0;
      edges.fDotPre[e] = 0.0;
      edges.fDotStar[e] = 0.0;
      edges.fFinal[e] = 0.0;
      edges.alpha[e] = 0.0;
      edges.alphaDot[e] = 0.0;
      edges.alphaDotMinus[e] = 0.0;
      continue;
    }
    const double d = ops.D.value(ed.off_ij);
    const double lo_i = bounds.lo[ed.i], hi_i = bounds.hi[ed.i];
    const double lo_j = bounds.lo[ed.j], hi_j = bounds.hi[ed.j];

    // Pass 1: convex limiting of the diffusive flux with raw bar states.
    const double fD = edges.fD[e];
    const double fStar =
        mcl_limit(fD, edges.barIJ[e], edges.barJI[e], lo_i, hi_i, lo_j, hi_j, d);
    edges.fStar[e] = fStar;
    edges.alpha[e] = fD != 0.0 ? fStar / fD : 0.0;

    // Pass 2: minmod prelimiting, then convex limiting of the mass flux
    // against the already-shifted bar states. The prelimiter acts on the
    // descending-index orientation of the edge, matching the i > j double
    // sums of the global factors below.
    const double barS_ij = edges.barIJ[e] + fStar / (2.0 * d);
    const double barS_ji = edges.barJI[e] - fStar / (2.0 * d);
    const double fM = edges.fM[e];
    const double fdot = -minmod(-fM, -(fM + fD - fStar));
    edges.fDotPre[e] = fdot;
    const double fDotStar =
        mcl_limit(fdot, barS_ij, barS_ji, lo_i, hi_i, lo_j, hi_j, d);
    edges.fDotStar[e] = fDotStar;
    // |fDotStar| may exceed |fM| only by roundoff of the cap arithmetic,
    // whose natural scale is set by the fluxes and the bound widths.
    const double cap_scale = std::abs(fM) + std::abs(fD) +
                             2.0 * d * (hi_i - lo_i + hi_j - lo_j);
    const double flux_tol = 1e-12 * cap_scale;
    if (std::abs(fDotStar) > std::abs(fM) + flux_tol ||
        (fDotStar * fM < 0.0 && std::abs(fDotStar) > flux_tol)) {
      throw std::logic_error("ce_limit: mass correction factor left [0, 1]");
    }
    const double adot =
        fM != 0.0 ? std::clamp(fDotStar / fM, 0.0, 1.0) : 0.0;
    edges.alphaDot[e] = adot;

    const double m = ops.Mc.value(ed.off_ij);
    const double ddot = udot[ed.i] - udot[ed.j];
    const double du = u[ed.j] - u[ed.i];
    const double s = ddot * du;
    Pplus += adot * m * std::max(0.0, s);
    Pminus += adot * m * std::min(0.0, s);
    Q += adot * m * ddot * ddot;
    Dval += (1.0 - edges.alpha[e]) * d * du * du;
  }
  Q = ops.lambda > 0.0 ? h / ops.lambda * Q : 0.0;

  const double alphaPlus = alpha_plus_formula(Pplus, Q, Dval, gamma);
  const double alphaMinus =
      alpha_minus_formula(alphaPlus, Pplus, Pminus, Q, Dval, gamma);

  for (std::size_t e = 0; e < ne; ++e) {
    const Edge& ed = ops.edges[e];
    if (edges.degenerate[e]) continue;
    const double s = (udot[ed.i] - udot[ed.j]) * (u[ed.j] - u[ed.i]);
    const double adm =
        s >= 0.0 ? edges.alphaDot[e] : alphaMinus * edges.alphaDot[e];
    edges.alphaDotMinus[e] = adm;
    edges.fFinal[e] =
        edges.alpha[e] * edges.fD[e] + alphaPlus * adm * edges.fM[e];
  }
  edges.alphaPlus = alphaPlus;
  edges.alphaMinus = alphaMinus;

  CoercivityReport report;
  report.Pplus = Pplus;
  report.Pminus = Pminus;
  report.Q = Q;
  report.Dval = Dval;
  report.alphaPlus = alphaPlus;
  report.alphaMinus = alphaMinus;
  const auto [lhs, rhs] = gcc_residual(edges, u, udot, ops, gamma, h);
  report.gccLhs = lhs;
  report.gccRhs = rhs;
  report.satisfied = lhs <= rhs + gcc_tolerance(udot, ops);
  return report;
}

}  // namespace afc
