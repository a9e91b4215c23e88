#include "afc1d/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace afc {

SparseOperator::SparseOperator(std::vector<int> row_offsets, std::vector<int> cols)
    : row_offsets_(std::move(row_offsets)), cols_(std::move(cols)) {
  if (row_offsets_.size() < 2 || row_offsets_.front() != 0 ||
      row_offsets_.back() != static_cast<int>(cols_.size())) {
    throw std::invalid_argument("SparseOperator: malformed row offsets");
  }
  values_.assign(cols_.size(), 0.0);
  for (int i = 0; i < rows(); ++i) {
    auto cols = row_cols(i);
    if (!std::is_sorted(cols.begin(), cols.end())) {
      throw std::invalid_argument("SparseOperator: row columns must be sorted");
    }
    for (int j : cols) {
      if (find(j, i) < 0) {
        throw std::invalid_argument("SparseOperator: pattern must be symmetric");
      }
    }
  }
}

SparseOperator SparseOperator::from_mesh_stencils(const Mesh1D& mesh) {
  const int n = mesh.num_unknowns();
  std::vector<int> offsets(1, 0);
  std::vector<int> cols;
  for (int i = 0; i < n; ++i) {
    int nb[3];
    if (mesh.periodic()) {
      nb[0] = (i + n - 1) % n;
      nb[1] = i;
      nb[2] = (i + 1) % n;
    } else {
      nb[0] = std::max(i - 1, 0);
      nb[1] = i;
      nb[2] = std::min(i + 1, n - 1);
    }
    std::sort(std::begin(nb), std::end(nb));
    for (int k = 0; k < 3; ++k) {
      if (k > 0 && nb[k] == nb[k - 1]) continue;
      cols.push_back(nb[k]);
    }
    offsets.push_back(static_cast<int>(cols.size()));
  }
  return SparseOperator(std::move(offsets), std::move(cols));
}

int SparseOperator::find(int i, int j) const {
  const int lo = row_offsets_[i];
  const int hi = row_offsets_[i + 1];
  auto it = std::lower_bound(cols_.begin() + lo, cols_.begin() + hi, j);
  if (it != cols_.begin() + hi && *it == j) {
    return static_cast<int>(it - cols_.begin());
  }
  return -1;
}

double& SparseOperator::at(int i, int j) {
  const int k = find(i, j);
  if (k < 0) throw std::out_of_range("SparseOperator::at: entry not in pattern");
  return values_[k];
}

double SparseOperator::at(int i, int j) const {
  const int k = find(i, j);
  if (k < 0) throw std::out_of_range("SparseOperator::at: entry not in pattern");
  return values_[k];
}

double SparseOperator::coeff(int i, int j) const {
  const int k = find(i, j);
  return k < 0 ? 0.0 : values_[k];
}

void SparseOperator::set_zero() { std::fill(values_.begin(), values_.end(), 0.0); }

void SparseOperator::apply(std::span<const double> x, std::span<double> y) const {
  for (int i = 0; i < rows(); ++i) {
    double s = 0.0;
    for (int k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
      s += values_[k] * x[cols_[k]];
    }
    y[i] = s;
  }
}

std::vector<double> SparseOperator::row_sums() const {
  std::vector<double> s(rows(), 0.0);
  for (int i = 0; i < rows(); ++i) {
    for (int k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
      s[i] += values_[k];
    }
  }
  return s;
}

bool SparseOperator::same_pattern(const SparseOperator& other) const {
  return row_offsets_ == other.row_offsets_ && cols_ == other.cols_;
}

void SparseOperator::dump_coordinate(std::ostream& os) const {
  for (int i = 0; i < rows(); ++i) {
    for (int k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
      os << i << ' ' << cols_[k] << ' ' << values_[k] << '\n';
    }
  }
}

std::vector<Edge> build_edges(const SparseOperator& pattern) {
  std::vector<Edge> edges;
  for (int i = 0; i < pattern.rows(); ++i) {
    for (int j : pattern.row_cols(i)) {
      if (j <= i) continue;
      edges.push_back(Edge{i, j, pattern.find(i, j), pattern.find(j, i)});
    }
  }
  return edges;
}

}  // namespace afc
