#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "afc1d/fluxes.hpp"
#include "afc1d/mesh.hpp"

namespace afc {

// One level of a grid-convergence study.
struct ConvergenceRecord {
  int N = 0;
  double h = 0.0;
  double l2Error = 0.0;
  std::optional<double> eoc;  // absent for the first level and for zero errors
};

// L2 error of the piecewise-linear field against an exact profile, computed
// with Gauss quadrature per element (1 to 5 points, default 5).
double l2_error(const NodalField& u, const Mesh1D& mesh,
                const std::function<double(double)>& exact, int quad_order = 5);

// Experimental orders of convergence for a list of (h, error) pairs with
// decreasing h: rate_k = log(e_{k-1}/e_k) / log(h_{k-1}/h_k). The first
// entry has no rate; zero errors make the rate undefined.
std::vector<std::optional<double>> eoc(
    const std::vector<std::pair<double, double>>& h_and_error);

std::vector<ConvergenceRecord> attach_eoc(std::vector<ConvergenceRecord> records);

// sqrt(sum_i m_i u_i^2).
double lumped_norm(std::span<const double> u, std::span<const double> mL);

// Overall correction factors: the diffusive one is 1 minus the ratio of the
// limited to the unlimited diffusive form, the mass one is the ratio of the
// effective mass form (alphaPlus * alphaDotMinus per edge) to the unlimited
// one. Absent when the corresponding denominator vanishes.
std::pair<std::optional<double>, std::optional<double>> overall_factors(
    const EdgeFluxSet& edges, const NodalField& u, const NodalField& udot,
    const SystemOperators& ops);

// Largest overshoot of `post` outside the bounds, 0 if none.
double bounds_violation(const LocalBounds& pre, const NodalField& post);

}  // namespace afc
