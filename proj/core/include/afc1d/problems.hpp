#pragma once

#include <functional>
#include <string>

#include "afc1d/mesh.hpp"
#include "afc1d/velocity.hpp"

namespace afc {

// A complete advection test problem: geometry, data and the exact solution
// u(x, t) = u0(x - t) with periodic wrap or zero upstream extension.
struct Problem {
  std::string name;
  double length = 1.0;
  BoundaryKind boundary = BoundaryKind::Periodic;
  std::function<double(double)> u0;
  std::function<double(double)> u_in;  // inflow datum as a function of time
  Velocity velocity = Velocity::constant(1.0);
  double T = 1.0;
  std::function<double(double, double)> exact;  // (x, t)
};

// Periodic transport of a box next to a smooth compactly supported bump;
// two discontinuities plus a C-infinity region, final time 1.
Problem problem_twoprofile();

// Inflow-outflow transport of a C1 cosine hump of radius 0.15 centred at
// 0.25, zero inflow datum, final time 0.5.
Problem problem_coshump();

Problem problem_by_name(const std::string& name);

}  // namespace afc
