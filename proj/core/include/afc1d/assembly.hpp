#pragma once

#include <utility>
#include <vector>

#include "afc1d/mesh.hpp"
#include "afc1d/sparse.hpp"
#include "afc1d/velocity.hpp"

namespace afc {

enum class DiffusionVariant { Rusanov, DiscreteUpwinding };

// Inflow boundary coupling. In 1D the weak-form boundary integrals collapse
// to point evaluations, so the functional is a list of (dof, |a.n|) pairs;
// it is empty for periodic meshes and when no endpoint is inflow.
struct InflowPoint {
  int dof;
  double weight;  // |a.n| at the boundary point
};

struct InflowFunctional {
  std::vector<InflowPoint> points;

  bool empty() const { return points.empty(); }

  // b_i = weight * u_in at each inflow dof, zero elsewhere.
  std::vector<double> assemble(int n, double uin_value) const {
    std::vector<double> b(n, 0.0);
    for (const auto& p : points) b[p.dof] += p.weight * uin_value;
    return b;
  }
};

// Assembled operator bundle for one mesh/velocity/time. Immutable once
// built; safe to share between threads.
struct SystemOperators {
  SparseOperator Mc;        // consistent mass
  std::vector<double> mL;   // lumped masses (row sums of Mc)
  SparseOperator A;         // advection, boundary penalty included
  SparseOperator D;         // artificial diffusion, zero row sums
  InflowFunctional inflow;
  double lambda = 0.0;      // max |a| over the domain
  DiffusionVariant dvariant = DiffusionVariant::Rusanov;
  std::vector<Edge> edges;  // i < j stencil edges over the shared pattern

  int size() const { return Mc.rows(); }
};

// Exact P1 mass matrix: per element of length l the contributions are
// l/3 on the diagonal and l/6 off it. Returns (Mc, lumped vector).
std::pair<SparseOperator, std::vector<double>> assemble_mass(const Mesh1D& mesh);

// Volume part of the advection operator plus, for inflow-outflow meshes,
// the |a.n| point penalty at inflow endpoints. Exact for constant
// velocity, 2-point Gauss per element otherwise.
SparseOperator assemble_advection(const Mesh1D& mesh, const Velocity& a, double t);

InflowFunctional inflow_functional(const Mesh1D& mesh, const Velocity& a, double t);

// Rusanov: d_ij = max{|a_ij|, |a_ji|}; discrete upwinding:
// d_ij = max{a_ij, 0, a_ji}. Diagonal set to the negated off-diagonal row
// sum in both cases.
SparseOperator assemble_diffusion(const SparseOperator& A, DiffusionVariant variant);

// Inflow data vector b for datum value u_in(t); identically zero for
// periodic meshes.
std::vector<double> assemble_inflow(const Mesh1D& mesh, const Velocity& a,
                                    double uin_value, double t);

SystemOperators assemble_system(const Mesh1D& mesh, const Velocity& a, double t,
                                DiffusionVariant variant);

}  // namespace afc
