#pragma once

#include <span>
#include <string>
#include <utility>

#include "afc1d/fluxes.hpp"

namespace afc {

// Global limiting state of one coercivity-enforcement pass. The two sides
// of the coercivity inequality are evaluated on the final fluxes; the pass
// is satisfied when gccLhs <= gccRhs up to a roundoff tolerance.
struct CoercivityReport {
  double Pplus = 0.0;
  double Pminus = 0.0;
  double Q = 0.0;
  double Dval = 0.0;
  double alphaPlus = 1.0;
  double alphaMinus = 1.0;
  double gccLhs = 0.0;
  double gccRhs = 0.0;
  bool satisfied = true;

  static std::string csv_header();
  std::string csv_row() const;
};

// minmod(a, b): min(a, b) when both arguments share a strict sign,
// max(a, b) when the signs differ, 0 otherwise. The limiter evaluates it
// on the descending-index orientation of each edge, consistent with the
// i > j double sums; the subsequent convex-limiting pass keeps the
// resulting mass correction factor inside [0, 1].
double minmod(double a, double b);

// Convex limiting of a single target flux: caps f so that the limited bar
// states stay inside the endpoint bounds. The result is sign-consistent
// with f and no larger in magnitude.
double mcl_limit(double f, double bar_ij, double bar_ji, double lo_i, double hi_i,
                 double lo_j, double hi_j, double d);

// Closed-form global factors of the coercivity enforcement step.
double alpha_plus_formula(double Pplus, double Q, double Dval, double gamma);
double alpha_minus_formula(double alphaPlus, double Pplus, double Pminus, double Q,
                           double Dval, double gamma);

// Full coercivity-enforcing limiter pass. Expects fD, fM and the bar states
// to be filled; fills fStar, fDotStar, fFinal, alpha, alphaDot,
// alphaDotMinus and the global alphaPlus/alphaMinus of `edges`. Throws
// std::logic_error if an intermediate mass correction factor leaves [0, 1]
// beyond roundoff, which would indicate a limiter bug.
CoercivityReport ce_limit(EdgeFluxSet& edges, const LocalBounds& bounds,
                          const SystemOperators& ops, const NodalField& u,
                          const NodalField& udot, double gamma, double h);

// d_h(.; w, z) = sum_{i>j} (1 - alpha_e) d_ij (w_i - w_j)(z_i - z_j); the
// factors are per-edge and symmetric, so the directed double sum collapses
// to this edge sum. Nonnegative for w = z and alpha in [0, 1].
double nonlinear_form_d(std::span<const double> alpha, const SystemOperators& ops,
                        std::span<const double> w, std::span<const double> z);

// m_h(.; w, z) = sum_{i>j} factor_e m_ij (w_i - w_j)(z_i - z_j).
double nonlinear_form_m(std::span<const double> factor, const SystemOperators& ops,
                        std::span<const double> w, std::span<const double> z);

// Evaluates both sides of the coercivity inequality for the factors stored
// in `edges` (alpha for the diffusive form, alphaPlus/alphaDotMinus for the
// mass form). Returns (lhs, rhs); the condition holds when lhs <= rhs.
std::pair<double, double> gcc_residual(const EdgeFluxSet& edges, const NodalField& u,
                                       const NodalField& udot,
                                       const SystemOperators& ops, double gamma,
                                       double h);

// Roundoff tolerance used for the satisfied flag: 1e-12 scaled by the
// unlimited mass-form magnitude sum_{i>j} m_ij (udot_i - udot_j)^2.
double gcc_tolerance(const NodalField& udot, const SystemOperators& ops);

}  // namespace afc
