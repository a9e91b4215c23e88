#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "afc1d/sparse.hpp"
#include "test_support.hpp"

using namespace afc;

TEST_CASE("stencil pattern for inflow-outflow meshes") {
  const Mesh1D m = Mesh1D::uniform(5, 1.0, BoundaryKind::InflowOutflow);
  const SparseOperator p = SparseOperator::from_mesh_stencils(m);
  CHECK(p.rows() == 5);
  auto row0 = p.row_cols(0);
  REQUIRE(row0.size() == 2);
  CHECK(row0[0] == 0);
  CHECK(row0[1] == 1);
  auto row2 = p.row_cols(2);
  REQUIRE(row2.size() == 3);
  CHECK(row2[0] == 1);
  CHECK(row2[2] == 3);
}

TEST_CASE("stencil pattern wraps on periodic meshes") {
  const Mesh1D m = Mesh1D::uniform(5, 1.0, BoundaryKind::Periodic);
  const SparseOperator p = SparseOperator::from_mesh_stencils(m);
  CHECK(p.rows() == 4);
  // the wrapped stencil of the first node contains the second-to-last vertex
  CHECK(p.find(0, 3) >= 0);
  CHECK(p.find(3, 0) >= 0);
  CHECK(p.find(0, 2) < 0);
  CHECK(build_edges(p).size() == 4);
}

TEST_CASE("value access and mat-vec") {
  const Mesh1D m = Mesh1D::uniform(4, 1.0, BoundaryKind::InflowOutflow);
  SparseOperator a = SparseOperator::from_mesh_stencils(m);
  a.at(0, 0) = 2.0;
  a.at(0, 1) = -1.0;
  a.at(1, 0) = -1.0;
  a.at(1, 1) = 2.0;
  CHECK(a.coeff(0, 3) == 0.0);
  CHECK_THROWS_AS(a.at(0, 3), std::out_of_range);

  std::vector<double> x = {1.0, 2.0, 0.0, 0.0};
  std::vector<double> y(4);
  a.apply(x, y);
  CHECK(y[0] == 0.0);
  CHECK(y[1] == 3.0);

  const auto sums = a.row_sums();
  CHECK(sums[0] == 1.0);
}

TEST_CASE("constructor validates the pattern") {
  // asymmetric: row 0 couples to 1 but not vice versa
  CHECK_THROWS_AS(SparseOperator({0, 2, 3}, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SparseOperator({0, 2, 4}, {1, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("edges carry valid value offsets shared across same-pattern operators") {
  const Mesh1D m = Mesh1D::uniform(7, 1.0, BoundaryKind::Periodic).perturbed(0.4, 5);
  SparseOperator a = SparseOperator::from_mesh_stencils(m);
  SparseOperator b = a;
  CHECK(a.same_pattern(b));
  const auto edges = build_edges(a);
  CHECK(edges.size() == 6);
  for (const Edge& e : edges) {
    CHECK(e.i < e.j);
    a.value(e.off_ij) = 10.0 * e.i + e.j;
    CHECK(a.at(e.i, e.j) == 10.0 * e.i + e.j);
  }
}

TEST_CASE("coordinate dump lists every stored entry") {
  const Mesh1D m = Mesh1D::uniform(3, 1.0, BoundaryKind::InflowOutflow);
  SparseOperator a = SparseOperator::from_mesh_stencils(m);
  a.at(1, 1) = 3.5;
  std::ostringstream os;
  a.dump_coordinate(os);
  CHECK(os.str().find("1 1 3.5") != std::string::npos);
  int lines = 0;
  for (char c : os.str()) lines += c == '\n';
  CHECK(lines == a.nnz());
}
