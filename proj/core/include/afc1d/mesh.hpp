#pragma once

#include <cstdint>
#include <vector>

namespace afc {

enum class BoundaryKind { Periodic, InflowOutflow };

// One-dimensional vertex mesh on [0, L]. Vertices are strictly increasing
// with the first at 0 and the last at L. Periodic meshes identify the last
// vertex with the first, so the number of unknowns is one less than the
// number of vertices and index arithmetic wraps modulo that count.
// Immutable after construction.
class Mesh1D {
 public:
  Mesh1D(std::vector<double> vertices, BoundaryKind boundary);

  static Mesh1D uniform(int num_vertices, double length, BoundaryKind boundary);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_elements() const { return num_vertices() - 1; }
  int num_unknowns() const {
    return boundary_ == BoundaryKind::Periodic ? num_vertices() - 1
                                               : num_vertices();
  }

  double vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const std::vector<double>& vertices() const { return vertices_; }
  double length() const { return vertices_.back(); }
  BoundaryKind boundary() const { return boundary_; }
  bool periodic() const { return boundary_ == BoundaryKind::Periodic; }

  double element_length(int e) const { return vertices_[e + 1] - vertices_[e]; }
  int dof_of_vertex(int v) const {
    return periodic() ? v % num_unknowns() : v;
  }

  double min_spacing() const;
  double max_spacing() const;
  bool is_uniform(double rel_tol = 1e-12) const;

  // Bisects every element at its midpoint; node count becomes 2N-1. Any
  // perturbation structure of the coarse mesh is inherited, never redone.
  Mesh1D refined() const;

  // Moves each interior vertex by xi * zeta * h with xi ~ Uniform[-0.5, 0.5)
  // drawn from SplitMix64(seed). Requires a uniform input mesh and zeta < 1,
  // which bounds every displacement by h/2 and keeps the mesh increasing.
  Mesh1D perturbed(double zeta, std::uint64_t seed) const;

 private:
  std::vector<double> vertices_;
  BoundaryKind boundary_;
};

}  // namespace afc
