#include <doctest.h>

#include <cmath>

#include "afc1d/assembly.hpp"
#include "afc1d/linear_solvers.hpp"
#include "test_support.hpp"

using namespace afc;

namespace {

double residual_norm(const SparseOperator& M, const std::vector<double>& x,
                     const std::vector<double>& r) {
  std::vector<double> Mx(x.size());
  M.apply(x, Mx);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (Mx[i] - r[i]) * (Mx[i] - r[i]);
    den += r[i] * r[i];
  }
  return std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
}

}  // namespace

TEST_CASE("mass solve reproduces constants") {
  for (auto bk : {BoundaryKind::Periodic, BoundaryKind::InflowOutflow}) {
    const Mesh1D m = Mesh1D::uniform(17, 1.0, bk).perturbed(0.5, 31);
    auto [Mc, mL] = assemble_mass(m);
    // r = Mc * 1 equals the lumped masses
    const std::vector<double> x = mass_solve(Mc, mL, bk);
    for (double v : x) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("mass solve on a two-element mesh against a hand solve") {
  const Mesh1D m({0.0, 0.5, 1.0}, BoundaryKind::InflowOutflow);
  auto [Mc, mL] = assemble_mass(m);
  const std::vector<double> r = {0.25, 0.5, 0.25};  // Mc * (1,1,1)
  const std::vector<double> x = mass_solve(Mc, r, BoundaryKind::InflowOutflow);
  for (double v : x) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("mass solve residuals stay at solver precision") {
  SplitMix64 rng(47);
  for (int N : {9, 33}) {
    for (auto bk : {BoundaryKind::Periodic, BoundaryKind::InflowOutflow}) {
      const Mesh1D m = Mesh1D::uniform(N, 1.0, bk).perturbed(0.4, 3);
      auto [Mc, mL] = assemble_mass(m);
      for (int trial = 0; trial < 20; ++trial) {
        const auto r = afc::test::random_vector(rng, Mc.rows());
        const auto x = mass_solve(Mc, r, bk);
        CHECK(residual_norm(Mc, x, r) <= 1e-12);
      }
    }
  }
}

TEST_CASE("small periodic systems use the dense fallback") {
  SplitMix64 rng(13);
  for (int N : {4}) {  // 3 unknowns: wrap entries merge with the bands
    const Mesh1D m = Mesh1D::uniform(N, 1.0, BoundaryKind::Periodic);
    auto [Mc, mL] = assemble_mass(m);
    const auto r = afc::test::random_vector(rng, Mc.rows());
    const auto x = mass_solve(Mc, r, BoundaryKind::Periodic);
    CHECK(residual_norm(Mc, x, r) <= 1e-12);
  }
}

TEST_CASE("cyclic solver handles the smallest distinct-corner system") {
  const Mesh1D m = Mesh1D::uniform(5, 1.0, BoundaryKind::Periodic);
  auto [Mc, mL] = assemble_mass(m);
  SplitMix64 rng(8);
  const auto r = afc::test::random_vector(rng, 4);
  const auto x = mass_solve(Mc, r, BoundaryKind::Periodic);
  CHECK(residual_norm(Mc, x, r) <= 1e-12);
}

TEST_CASE("non-SPD input is rejected") {
  const Mesh1D m = Mesh1D::uniform(5, 1.0, BoundaryKind::InflowOutflow);
  SparseOperator bad = SparseOperator::from_mesh_stencils(m);
  for (int i = 0; i < 5; ++i) bad.at(i, i) = 1.0;
  bad.at(2, 2) = -1.0;
  const std::vector<double> r(5, 1.0);
  CHECK_THROWS_AS(mass_solve(bad, r, BoundaryKind::InflowOutflow),
                  std::runtime_error);

  // indefinite tridiagonal: elimination hits a vanishing pivot
  const std::vector<double> diag = {1.0, 1.0, 1.0};
  const std::vector<double> off = {1.0, 1.0};
  const std::vector<double> r3 = {1.0, 1.0, 1.0};
  CHECK_THROWS_AS(solve_tridiagonal_spd(off, diag, off, r3),
                  std::runtime_error);
}
