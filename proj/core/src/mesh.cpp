#include "afc1d/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "afc1d/rng.hpp"

namespace afc {

Mesh1D::Mesh1D(std::vector<double> vertices, BoundaryKind boundary)
    : vertices_(std::move(vertices)), boundary_(boundary) {
  if (vertices_.size() < 3) {
    throw std::invalid_argument("Mesh1D: need at least 3 vertices");
  }
  if (vertices_.front() != 0.0) {
    throw std::invalid_argument("Mesh1D: first vertex must be 0");
  }
  if (vertices_.back() <= 0.0) {
    throw std::invalid_argument("Mesh1D: domain length must be positive");
  }
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (!(vertices_[i] > vertices_[i - 1])) {
      throw std::invalid_argument("Mesh1D: vertices must be strictly increasing");
    }
  }
}

Mesh1D Mesh1D::uniform(int num_vertices, double length, BoundaryKind boundary) {
  if (num_vertices < 3) {
    throw std::invalid_argument("Mesh1D::uniform: need at least 3 vertices");
  }
  if (length <= 0.0) {
    throw std::invalid_argument("Mesh1D::uniform: length must be positive");
  }
  std::vector<double> x(static_cast<std::size_t>(num_vertices));
  for (int i = 0; i < num_vertices; ++i) {
    x[i] = static_cast<double>(i) * length / (num_vertices - 1);
  }
  x.front() = 0.0;
  x.back() = length;
  return Mesh1D(std::move(x), boundary);
}

double Mesh1D::min_spacing() const {
  double m = vertices_[1] - vertices_[0];
  for (int e = 1; e < num_elements(); ++e) {
    m = std::min(m, element_length(e));
  }
  return m;
}

double Mesh1D::max_spacing() const {
  double m = vertices_[1] - vertices_[0];
  for (int e = 1; e < num_elements(); ++e) {
    m = std::max(m, element_length(e));
  }
  return m;
}

bool Mesh1D::is_uniform(double rel_tol) const {
  const double h = length() / num_elements();
  for (int e = 0; e < num_elements(); ++e) {
    if (std::abs(element_length(e) - h) > rel_tol * h) return false;
  }
  return true;
}

Mesh1D Mesh1D::refined() const {
  std::vector<double> x;
  x.reserve(2 * vertices_.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    x.push_back(vertices_[i]);
    x.push_back(0.5 * (vertices_[i] + vertices_[i + 1]));
  }
  x.push_back(vertices_.back());
  return Mesh1D(std::move(x), boundary_);
}

Mesh1D Mesh1D::perturbed(double zeta, std::uint64_t seed) const {
  if (!(zeta >= 0.0 && zeta < 1.0)) {
    throw std::invalid_argument("Mesh1D::perturbed: zeta must be in [0, 1)");
  }
  if (!is_uniform()) {
    throw std::invalid_argument("Mesh1D::perturbed: input mesh must be uniform");
  }
  const double h = length() / num_elements();
  SplitMix64 rng(seed);
  std::vector<double> x = vertices_;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const double xi = rng.next_unit() - 0.5;  // [-0.5, 0.5)
    x[i] += xi * zeta * h;
  }
  return Mesh1D(std::move(x), boundary_);
}

}  // namespace afc
