#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

namespace afc {

// Advection velocity a(x, t). Constant velocities are integrated exactly
// during assembly; general fields fall back to Gauss quadrature and carry a
// user-supplied bound for the maximum speed.
class Velocity {
 public:
  static Velocity constant(double a) {
    Velocity v;
    v.const_value_ = a;
    v.is_constant_ = true;
    v.max_abs_ = std::abs(a);
    return v;
  }

  static Velocity field(std::function<double(double, double)> a, double max_abs,
                        bool time_dependent) {
    if (!a) throw std::invalid_argument("Velocity::field: null function");
    if (max_abs < 0.0) throw std::invalid_argument("Velocity::field: bad bound");
    Velocity v;
    v.fn_ = std::move(a);
    v.is_constant_ = false;
    v.time_dependent_ = time_dependent;
    v.max_abs_ = max_abs;
    return v;
  }

  double operator()(double x, double t) const {
    return is_constant_ ? const_value_ : fn_(x, t);
  }

  bool is_constant() const { return is_constant_; }
  bool time_dependent() const { return time_dependent_; }
  double max_abs() const { return max_abs_; }
  double constant_value() const { return const_value_; }

 private:
  std::function<double(double, double)> fn_;
  double const_value_ = 0.0;
  double max_abs_ = 0.0;
  bool is_constant_ = true;
  bool time_dependent_ = false;
};

}  // namespace afc
