#include "afc1d/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace afc {

Problem problem_twoprofile() {
  Problem p;
  p.name = "twoprofile";
  p.length = 1.0;
  p.boundary = BoundaryKind::Periodic;
  p.u0 = [](double x) {
    if (x >= 0.2 && x <= 0.4) return 1.0;
    if (x > 0.5 && x < 0.9) {
      return std::exp(10.0) * std::exp(1.0 / (0.5 - x)) * std::exp(1.0 / (x - 0.9));
    }
    return 0.0;
  };
  p.u_in = [](double) { return 0.0; };  // unused on periodic meshes
  p.velocity = Velocity::constant(1.0);
  p.T = 1.0;
  p.exact = [u0 = p.u0](double x, double t) {
    double y = std::fmod(x - t, 1.0);
    if (y < 0.0) y += 1.0;
    return u0(y);
  };
  return p;
}

Problem problem_coshump() {
  Problem p;
  p.name = "coshump";
  p.length = 1.0;
  p.boundary = BoundaryKind::InflowOutflow;
  p.u0 = [](double x) {
    if (std::abs(x - 0.25) <= 0.15) {
      return 0.5 * (1.0 + std::cos(std::numbers::pi / 0.15 * (x - 0.25)));
    }
    return 0.0;
  };
  p.u_in = [](double) { return 0.0; };
  p.velocity = Velocity::constant(1.0);
  p.T = 0.5;
  p.exact = [u0 = p.u0](double x, double t) {
    const double y = x - t;
    return y >= 0.0 && y <= 1.0 ? u0(y) : 0.0;
  };
  return p;
}

Problem problem_by_name(const std::string& name) {
  if (name == "twoprofile") return problem_twoprofile();
  if (name == "coshump") return problem_coshump();
  throw std::invalid_argument("unknown problem: " + name);
}

}  // namespace afc
