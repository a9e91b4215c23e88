#include "afc1d/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace afc {

namespace {

struct QuadRule {
  int n;
  const double* nodes;    // on [-1, 1]
  const double* weights;  // summing to 2
};

constexpr double kN1[] = {0.0};
constexpr double kW1[] = {2.0};
constexpr double kN2[] = {-0.5773502691896257, 0.5773502691896257};
constexpr double kW2[] = {1.0, 1.0};
constexpr double kN3[] = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr double kW3[] = {0.5555555555555556, 0.8888888888888888,
                          0.5555555555555556};
constexpr double kN4[] = {-0.8611363115940526, -0.3399810435848563,
                          0.3399810435848563, 0.8611363115940526};
constexpr double kW4[] = {0.3478548451374538, 0.6521451548625461,
                          0.6521451548625461, 0.3478548451374538};
constexpr double kN5[] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                          0.5384693101056831, 0.9061798459386640};
constexpr double kW5[] = {0.2369268850561891, 0.4786286704993665,
                          0.5688888888888889, 0.4786286704993665,
                          0.2369268850561891};

QuadRule gauss_rule(int n) {
  switch (n) {
    case 1: return {1, kN1, kW1};
    case 2: return {2, kN2, kW2};
    case 3: return {3, kN3, kW3};
    case 4: return {4, kN4, kW4};
    case 5: return {5, kN5, kW5};
    default:
      throw std::invalid_argument("l2_error: quadrature order must be 1..5");
  }
}

}  // namespace

double l2_error(const NodalField& u, const Mesh1D& mesh,
                const std::function<double(double)>& exact, int quad_order) {
  const QuadRule rule = gauss_rule(quad_order);
  double total = 0.0;
  for (int e = 0; e < mesh.num_elements(); ++e) {
    const double xl = mesh.vertex(e);
    const double l = mesh.element_length(e);
    const double uL = u[mesh.dof_of_vertex(e)];
    const double uR = u[mesh.dof_of_vertex(e + 1)];
    double acc = 0.0;
    for (int q = 0; q < rule.n; ++q) {
      const double s = 0.5 * (1.0 + rule.nodes[q]);  // reference coordinate
      const double x = xl + s * l;
      const double uh = uL + (uR - uL) * s;
      const double diff = uh - exact(x);
      acc += rule.weights[q] * diff * diff;
    }
    total += 0.5 * l * acc;
  }
  return std::sqrt(total);
}

std::vector<std::optional<double>> eoc(
    const std::vector<std::pair<double, double>>& h_and_error) {
  if (h_and_error.size() < 2) {
    throw std::invalid_argument("eoc: need at least two records");
  }
  std::vector<std::optional<double>> rates(h_and_error.size());
  for (std::size_t k = 1; k < h_and_error.size(); ++k) {
    const auto [h_prev, e_prev] = h_and_error[k - 1];
    const auto [h_cur, e_cur] = h_and_error[k];
    if (!(h_cur < h_prev)) {
      throw std::invalid_argument("eoc: mesh sizes must decrease");
    }
    if (e_prev <= 0.0 || e_cur <= 0.0) continue;  // rate undefined
    rates[k] = std::log(e_prev / e_cur) / std::log(h_prev / h_cur);
  }
  return rates;
}

std::vector<ConvergenceRecord> attach_eoc(std::vector<ConvergenceRecord> records) {
  std::vector<std::pair<double, double>> he;
  he.reserve(records.size());
  for (const auto& r : records) he.emplace_back(r.h, r.l2Error);
  const auto rates = eoc(he);
  for (std::size_t k = 0; k < records.size(); ++k) records[k].eoc = rates[k];
  return records;
}

double lumped_norm(std::span<const double> u, std::span<const double> mL) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += mL[i] * u[i] * u[i];
  return std::sqrt(s);
}

std::pair<std::optional<double>, std::optional<double>> overall_factors(
    const EdgeFluxSet& edges, const NodalField& u, const NodalField& udot,
    const SystemOperators& ops) {
  double d_raw = 0.0, d_residual = 0.0;
  double m_raw = 0.0, m_limited = 0.0;
  for (std::size_t e = 0; e < ops.edges.size(); ++e) {
    const Edge& ed = ops.edges[e];
    const double d = ops.D.value(ed.off_ij);
    const double m = ops.Mc.value(ed.off_ij);
    const double du = u[ed.i] - u[ed.j];
    const double ddot = udot[ed.i] - udot[ed.j];
    d_raw += d * du * du;
    d_residual += (1.0 - edges.alpha[e]) * d * du * du;
    m_raw += m * ddot * ddot;
    m_limited += edges.alphaPlus * edges.alphaDotMinus[e] * m * ddot * ddot;
  }
  std::optional<double> alphaBar, alphaDotBar;
  if (d_raw > 0.0) alphaBar = 1.0 - d_residual / d_raw;
  if (m_raw > 0.0) alphaDotBar = m_limited / m_raw;
  return {alphaBar, alphaDotBar};
}

double bounds_violation(const LocalBounds& pre, const NodalField& post) {
  double worst = 0.0;
  for (std::size_t i = 0; i < post.size(); ++i) {
    worst = std::max({worst, pre.lo[i] - post[i], post[i] - pre.hi[i]});
  }
  return worst;
}

}  // namespace afc
