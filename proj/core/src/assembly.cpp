#include "afc1d/assembly.hpp"

#include <algorithm>
#include <cmath>

namespace afc {

std::pair<SparseOperator, std::vector<double>> assemble_mass(const Mesh1D& mesh) {
  SparseOperator Mc = SparseOperator::from_mesh_stencils(mesh);
  for (int e = 0; e < mesh.num_elements(); ++e) {
    const double l = mesh.element_length(e);
    const int L = mesh.dof_of_vertex(e);
    const int R = mesh.dof_of_vertex(e + 1);
    Mc.at(L, L) += l / 3.0;
    Mc.at(R, R) += l / 3.0;
    Mc.at(L, R) += l / 6.0;
    Mc.at(R, L) += l / 6.0;
  }
  std::vector<double> lumped = Mc.row_sums();
  return {std::move(Mc), std::move(lumped)};
}

namespace {

// 2-point Gauss on the reference element [0, 1].
constexpr double kGauss2Pt[2] = {0.21132486540518712, 0.78867513459481288};

}  // namespace

SparseOperator assemble_advection(const Mesh1D& mesh, const Velocity& a, double t) {
  SparseOperator A = SparseOperator::from_mesh_stencils(mesh);
  for (int e = 0; e < mesh.num_elements(); ++e) {
    const int L = mesh.dof_of_vertex(e);
    const int R = mesh.dof_of_vertex(e + 1);
    if (a.is_constant()) {
      // integral of phi_i * a * phi_j' over the element; the lengths cancel.
      const double half = 0.5 * a.constant_value();
      A.at(L, L) += -half;
      A.at(L, R) += half;
      A.at(R, L) += -half;
      A.at(R, R) += half;
    } else {
      const double xl = mesh.vertex(e);
      const double l = mesh.element_length(e);
      double wl = 0.0, wr = 0.0;  // weighted velocity moments against phi_L, phi_R
      for (double s : kGauss2Pt) {
        const double av = a(xl + s * l, t) * 0.5;  // Gauss weight l/2, then /l below
        wl += av * (1.0 - s);
        wr += av * s;
      }
      A.at(L, L) += -wl;
      A.at(L, R) += wl;
      A.at(R, L) += -wr;
      A.at(R, R) += wr;
    }
  }
  for (const auto& p : inflow_functional(mesh, a, t).points) {
    A.at(p.dof, p.dof) += p.weight;
  }
  return A;
}

InflowFunctional inflow_functional(const Mesh1D& mesh, const Velocity& a, double t) {
  InflowFunctional f;
  if (mesh.periodic()) return f;
  const double a_left = a(0.0, t);
  if (a_left > 0.0) {  // outward normal -1, a.n < 0
    f.points.push_back({0, a_left});
  }
  const double a_right = a(mesh.length(), t);
  if (a_right < 0.0) {  // outward normal +1, a.n < 0
    f.points.push_back({mesh.num_unknowns() - 1, -a_right});
  }
  return f;
}

SparseOperator assemble_diffusion(const SparseOperator& A, DiffusionVariant variant) {
  SparseOperator D = A;
  D.set_zero();
  for (const Edge& e : build_edges(A)) {
    const double aij = A.value(e.off_ij);
    const double aji = A.value(e.off_ji);
    const double d = variant == DiffusionVariant::Rusanov
                         ? std::max(std::abs(aij), std::abs(aji))
                         : std::max({aij, 0.0, aji});
    D.value(e.off_ij) = d;
    D.value(e.off_ji) = d;
  }
  for (int i = 0; i < D.rows(); ++i) {
    double offsum = 0.0;
    auto cols = D.row_cols(i);
    auto vals = D.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] != i) offsum += vals[k];
    }
    D.at(i, i) = -offsum;
  }
  return D;
}

std::vector<double> assemble_inflow(const Mesh1D& mesh, const Velocity& a,
                                    double uin_value, double t) {
  return inflow_functional(mesh, a, t).assemble(mesh.num_unknowns(), uin_value);
}

SystemOperators assemble_system(const Mesh1D& mesh, const Velocity& a, double t,
                                DiffusionVariant variant) {
  SystemOperators ops;
  auto [Mc, mL] = assemble_mass(mesh);
  ops.Mc = std::move(Mc);
  ops.mL = std::move(mL);
  ops.A = assemble_advection(mesh, a, t);
  ops.D = assemble_diffusion(ops.A, variant);
  ops.inflow = inflow_functional(mesh, a, t);
  ops.lambda = a.max_abs();
  ops.dvariant = variant;
  ops.edges = build_edges(ops.Mc);
  return ops;
}

}  // namespace afc
