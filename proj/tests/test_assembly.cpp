#include <doctest.h>

#include <cmath>

#include "afc1d/assembly.hpp"
#include "test_support.hpp"

using namespace afc;

TEST_CASE("mass matrix entries match hand integration of hat products") {
  const Mesh1D m = Mesh1D::uniform(33, 1.0, BoundaryKind::InflowOutflow);
  const double h = 1.0 / 32.0;
  auto [Mc, mL] = assemble_mass(m);

  // interior node
  CHECK(Mc.at(5, 5) == doctest::Approx(2.0 * h / 3.0).epsilon(1e-15));
  CHECK(Mc.at(5, 4) == doctest::Approx(h / 6.0).epsilon(1e-15));
  CHECK(Mc.at(5, 6) == doctest::Approx(h / 6.0).epsilon(1e-15));
  CHECK(mL[5] == doctest::Approx(h).epsilon(1e-15));

  // boundary node sees a single element
  CHECK(Mc.at(0, 0) == doctest::Approx(h / 3.0).epsilon(1e-15));
  CHECK(Mc.at(0, 1) == doctest::Approx(h / 6.0).epsilon(1e-15));

  // two-element mesh reproduces the per-element matrix [[l/3,l/6],[l/6,l/3]]
  const Mesh1D two({0.0, 0.5, 1.25}, BoundaryKind::InflowOutflow);
  auto [M2, mL2] = assemble_mass(two);
  CHECK(M2.at(0, 0) == doctest::Approx(0.5 / 3.0).epsilon(1e-15));
  CHECK(M2.at(0, 1) == doctest::Approx(0.5 / 6.0).epsilon(1e-15));
  CHECK(M2.at(1, 1) == doctest::Approx(0.5 / 3.0 + 0.75 / 3.0).epsilon(1e-15));
}

TEST_CASE("lumped masses are the row sums") {
  for (auto bk : {BoundaryKind::Periodic, BoundaryKind::InflowOutflow}) {
    const Mesh1D m = Mesh1D::uniform(17, 1.0, bk).perturbed(0.6, 11);
    auto [Mc, mL] = assemble_mass(m);
    const auto sums = Mc.row_sums();
    double total = 0.0;
    for (int i = 0; i < Mc.rows(); ++i) {
      CHECK(mL[i] == sums[i]);
      CHECK(mL[i] > 0.0);
      total += mL[i];
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("advection entries for unit velocity") {
  const Mesh1D m = Mesh1D::uniform(9, 1.0, BoundaryKind::InflowOutflow);
  const SparseOperator A = assemble_advection(m, Velocity::constant(1.0), 0.0);
  CHECK(A.at(4, 5) == 0.5);
  CHECK(A.at(4, 3) == -0.5);
  CHECK(A.at(4, 4) == 0.0);
  // inflow node: volume part -1/2 plus the |a.n| point penalty 1
  CHECK(A.at(0, 0) == 0.5);
  // outflow node keeps only the volume part
  CHECK(A.at(8, 8) == 0.5);
}

TEST_CASE("periodic advection rows sum to zero by partition of unity") {
  const Mesh1D m = Mesh1D::uniform(17, 1.0, BoundaryKind::Periodic).perturbed(0.5, 2);
  const SparseOperator A = assemble_advection(m, Velocity::constant(1.0), 0.0);
  for (double s : A.row_sums()) CHECK(std::abs(s) <= 1e-16);
}

TEST_CASE("advection bilinear form is positive semi-definite") {
  SplitMix64 rng(99);
  const Mesh1D io =
      Mesh1D::uniform(21, 1.0, BoundaryKind::InflowOutflow).perturbed(0.5, 4);
  const SparseOperator A = assemble_advection(io, Velocity::constant(1.0), 0.0);
  const int n = io.num_unknowns();
  for (int trial = 0; trial < 50; ++trial) {
    const auto v = afc::test::random_vector(rng, n);
    std::vector<double> Av(n);
    A.apply(v, Av);
    double quad = 0.0;
    for (int i = 0; i < n; ++i) quad += v[i] * Av[i];
    const double boundary = 0.5 * (v[0] * v[0] + v[n - 1] * v[n - 1]);
    CHECK(std::abs(quad - boundary) <= 1e-13);
  }

  const Mesh1D per = Mesh1D::uniform(21, 1.0, BoundaryKind::Periodic).perturbed(0.5, 4);
  const SparseOperator Ap = assemble_advection(per, Velocity::constant(1.0), 0.0);
  const int np = per.num_unknowns();
  for (int trial = 0; trial < 50; ++trial) {
    const auto v = afc::test::random_vector(rng, np);
    std::vector<double> Av(np);
    Ap.apply(v, Av);
    double quad = 0.0;
    for (int i = 0; i < np; ++i) quad += v[i] * Av[i];
    CHECK(std::abs(quad) <= 1e-13);
  }
}

TEST_CASE("two-point Gauss volume integrals are exact for linear velocity") {
  const Mesh1D m({0.0, 0.5, 1.0}, BoundaryKind::InflowOutflow);
  const Velocity a = Velocity::field([](double x, double) { return x; }, 1.0, false);
  const SparseOperator A = assemble_advection(m, a, 0.0);
  // element [0, 0.5]: integral of phi_L * x * phi_R' dx = l/6 with l = 0.5
  CHECK(A.at(0, 1) == doctest::Approx(0.5 / 6.0).epsilon(1e-14));
  // diagonal of the middle node: 1/6 from the left element, -1/3 from the right
  CHECK(A.at(1, 1) == doctest::Approx(-1.0 / 6.0).epsilon(1e-13));
}

TEST_CASE("artificial diffusion variants") {
  const Mesh1D m = Mesh1D::uniform(9, 1.0, BoundaryKind::Periodic);
  const SparseOperator A = assemble_advection(m, Velocity::constant(1.0), 0.0);

  const SparseOperator Dr = assemble_diffusion(A, DiffusionVariant::Rusanov);
  CHECK(Dr.at(4, 5) == 0.5);
  CHECK(Dr.at(4, 3) == 0.5);
  CHECK(Dr.at(4, 4) == -1.0);

  // in 1D with constant velocity the discrete upwinding coefficients agree
  const SparseOperator Du = assemble_diffusion(A, DiffusionVariant::DiscreteUpwinding);
  CHECK(Du.at(4, 5) == 0.5);
  CHECK(Du.at(4, 3) == 0.5);

  SparseOperator zero = A;
  zero.set_zero();
  const SparseOperator Dz = assemble_diffusion(zero, DiffusionVariant::Rusanov);
  for (int k = 0; k < Dz.nnz(); ++k) CHECK(Dz.value(k) == 0.0);
}

TEST_CASE("diffusion operator structure on perturbed meshes") {
  const Mesh1D m = Mesh1D::uniform(17, 1.0, BoundaryKind::Periodic).perturbed(0.7, 9);
  const SparseOperator A = assemble_advection(m, Velocity::constant(1.0), 0.0);
  const SparseOperator D = assemble_diffusion(A, DiffusionVariant::Rusanov);
  for (const Edge& e : build_edges(D)) {
    CHECK(D.value(e.off_ij) == D.value(e.off_ji));
    CHECK(D.value(e.off_ij) >= 0.0);
  }
  for (double s : D.row_sums()) CHECK(std::abs(s) <= 1e-15);
}

TEST_CASE("velocity scaling carries through A and D") {
  const Mesh1D m = Mesh1D::uniform(9, 1.0, BoundaryKind::Periodic);
  const SparseOperator A1 = assemble_advection(m, Velocity::constant(1.0), 0.0);
  const SparseOperator A3 = assemble_advection(m, Velocity::constant(3.0), 0.0);
  const SparseOperator D1 = assemble_diffusion(A1, DiffusionVariant::Rusanov);
  const SparseOperator D3 = assemble_diffusion(A3, DiffusionVariant::Rusanov);
  for (int k = 0; k < A1.nnz(); ++k) {
    CHECK(A3.value(k) == doctest::Approx(3.0 * A1.value(k)).epsilon(1e-15));
    CHECK(D3.value(k) == doctest::Approx(3.0 * D1.value(k)).epsilon(1e-15));
  }
}

TEST_CASE("inflow functional and data vector") {
  const Mesh1D io = Mesh1D::uniform(9, 1.0, BoundaryKind::InflowOutflow);
  const Velocity a = Velocity::constant(1.0);

  const auto zero = assemble_inflow(io, a, 0.0, 0.0);
  for (double b : zero) CHECK(b == 0.0);

  const auto b = assemble_inflow(io, a, 2.0, 0.0);
  CHECK(b[0] == 2.0);
  for (int i = 1; i < 9; ++i) CHECK(b[i] == 0.0);

  // negative velocity moves the inflow to the right endpoint
  const auto f = inflow_functional(io, Velocity::constant(-1.5), 0.0);
  REQUIRE(f.points.size() == 1);
  CHECK(f.points[0].dof == 8);
  CHECK(f.points[0].weight == 1.5);

  const Mesh1D per = Mesh1D::uniform(9, 1.0, BoundaryKind::Periodic);
  CHECK(inflow_functional(per, a, 0.0).empty());
}

TEST_CASE("assembled system bundle is consistent") {
  const Mesh1D m = Mesh1D::uniform(9, 1.0, BoundaryKind::Periodic);
  const SystemOperators ops =
      assemble_system(m, Velocity::constant(1.0), 0.0, DiffusionVariant::Rusanov);
  CHECK(ops.size() == 8);
  CHECK(ops.lambda == 1.0);
  CHECK(ops.Mc.same_pattern(ops.A));
  CHECK(ops.Mc.same_pattern(ops.D));
  CHECK(ops.edges.size() == 8);
}
