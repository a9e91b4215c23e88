#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "afc1d/mesh.hpp"

namespace afc {

// Row-compressed matrix with a symmetric sparsity pattern: j is stored in
// row i if and only if i is stored in row j. Column indices are sorted
// within each row. Entries outside the pattern cannot be written.
class SparseOperator {
 public:
  SparseOperator() = default;
  SparseOperator(std::vector<int> row_offsets, std::vector<int> cols);

  // Pattern over the nodal stencils of a mesh: every unknown couples to
  // itself and its element neighbours (wrapping for periodic meshes).
  static SparseOperator from_mesh_stencils(const Mesh1D& mesh);

  int rows() const { return static_cast<int>(row_offsets_.size()) - 1; }
  int nnz() const { return static_cast<int>(values_.size()); }

  // Index into the value array, or -1 if (i, j) is outside the pattern.
  int find(int i, int j) const;

  double& at(int i, int j);
  double at(int i, int j) const;
  // Value at (i, j), 0 if outside the pattern.
  double coeff(int i, int j) const;

  double value(int k) const { return values_[k]; }
  double& value(int k) { return values_[k]; }

  std::span<const int> row_cols(int i) const {
    return {cols_.data() + row_offsets_[i],
            static_cast<std::size_t>(row_offsets_[i + 1] - row_offsets_[i])};
  }
  std::span<const double> row_values(int i) const {
    return {values_.data() + row_offsets_[i],
            static_cast<std::size_t>(row_offsets_[i + 1] - row_offsets_[i])};
  }
  std::span<double> row_values(int i) {
    return {values_.data() + row_offsets_[i],
            static_cast<std::size_t>(row_offsets_[i + 1] - row_offsets_[i])};
  }

  void set_zero();
  void apply(std::span<const double> x, std::span<double> y) const;  // y = M x
  std::vector<double> row_sums() const;
  bool same_pattern(const SparseOperator& other) const;

  // Coordinate-format (i, j, value) dump for debugging.
  void dump_coordinate(std::ostream& os) const;

 private:
  std::vector<int> row_offsets_;
  std::vector<int> cols_;
  std::vector<double> values_;
};

// Undirected stencil edge (i, j) with i < j. The offsets index the value
// arrays of any operator sharing the pattern the edges were built from.
struct Edge {
  int i;
  int j;
  int off_ij;
  int off_ji;
};

std::vector<Edge> build_edges(const SparseOperator& pattern);

}  // namespace afc
