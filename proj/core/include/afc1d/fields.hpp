#pragma once

#include <cstddef>
#include <vector>

namespace afc {

// Nodal values at the unknowns together with the time they belong to.
struct NodalField {
  std::vector<double> values;
  double time = 0.0;

  NodalField() = default;
  NodalField(std::size_t n, double value, double t = 0.0)
      : values(n, value), time(t) {}

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
};

// Stencil-local solution bounds u_i^min / u_i^max per unknown.
struct LocalBounds {
  std::vector<double> lo;
  std::vector<double> hi;
};

}  // namespace afc
