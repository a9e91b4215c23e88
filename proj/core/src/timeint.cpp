#include "afc1d/timeint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "afc1d/diagnostics.hpp"

namespace afc {

void TimeConfig::validate() const {
  if (!(nu > 0.0)) throw std::invalid_argument("TimeConfig: nu must be positive");
  if (rk_order < 1 || rk_order > 3) {
    throw std::invalid_argument("TimeConfig: rk_order must be 1, 2 or 3");
  }
  if (!(T >= 0.0)) throw std::invalid_argument("TimeConfig: T must be nonnegative");
}

double cfl_timestep(const Mesh1D& mesh, double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("cfl_timestep: nu must be positive");
  return nu * mesh.min_spacing();
}

namespace {

bool all_finite(const NodalField& u) {
  for (double v : u.values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

NodalField convex_combine(double a, const NodalField& u, double b,
                          const NodalField& v, double time) {
  NodalField out(u.size(), 0.0, time);
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = a * u[i] + b * v[i];
  return out;
}

}  // namespace

NodalField ssprk_step(const NodalField& u, double t, double dt, int order,
                      const RhsFn& rhs, const StageObserver& observer) {
  auto euler = [&](const NodalField& v, double tv, int stage) {
    const NodalField L = rhs(v, tv);
    NodalField out(v.size(), 0.0, tv + dt);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] + dt * L[i];
    if (observer) observer(v, out, tv, stage);
    return out;
  };
  switch (order) {
    case 1:
      return euler(u, t, 0);
    case 2: {
      const NodalField u1 = euler(u, t, 0);
      const NodalField u2 = euler(u1, t + dt, 1);
      return convex_combine(0.5, u, 0.5, u2, t + dt);
    }
    case 3: {
      const NodalField u1 = euler(u, t, 0);
      NodalField u2 = convex_combine(0.75, u, 0.25, euler(u1, t + dt, 1),
                                     t + 0.5 * dt);
      const NodalField u3 = euler(u2, t + 0.5 * dt, 2);
      return convex_combine(1.0 / 3.0, u, 2.0 / 3.0, u3, t + dt);
    }
    default:
      throw std::invalid_argument("ssprk_step: order must be 1, 2 or 3");
  }
}

RunResult run(const Mesh1D& mesh, const SchemeConfig& scheme,
              const TimeConfig& time, const Problem& problem) {
  scheme.validate();
  time.validate();
  if (std::abs(mesh.length() - problem.length) > 1e-12 * problem.length ||
      mesh.boundary() != problem.boundary) {
    throw std::invalid_argument("run: mesh does not match the problem domain");
  }

  RunResult res;
  res.ops = assemble_system(mesh, problem.velocity, 0.0, scheme.diffusion);
  const int n = mesh.num_unknowns();

  NodalField u(n, 0.0, 0.0);
  for (int i = 0; i < n; ++i) u[i] = problem.u0(mesh.vertex(i));
  if (!all_finite(u)) throw DivergenceError(0, 0.0);
  res.initialLumpedNorm = lumped_norm(u.values, res.ops.mL);

  std::vector<double> snaps = time.snapshot_times;
  std::sort(snaps.begin(), snaps.end());
  for (double s : snaps) {
    if (s < 0.0 || s > time.T + 1e-12 * std::max(time.T, 1.0)) {
      throw std::invalid_argument("run: snapshot time outside [0, T]");
    }
  }

  const double base_dt = cfl_timestep(mesh, time.nu);
  const double tiny = 1e-9 * base_dt;

  auto record_snapshot = [&](double at) { res.snapshots.emplace_back(at, u); };
  std::size_t next_snap = 0;
  while (next_snap < snaps.size() && snaps[next_snap] <= tiny) {
    record_snapshot(0.0);
    ++next_snap;
  }

  // Event times the integrator must land on exactly.
  std::vector<double> events;
  for (std::size_t k = next_snap; k < snaps.size(); ++k) {
    if (events.empty() || snaps[k] - events.back() > tiny) events.push_back(snaps[k]);
  }
  if (events.empty() || time.T - events.back() > tiny) events.push_back(time.T);

  int step = 0;
  double t = 0.0;
  bool partial = false;

  RhsDiagnostics rhs_diag;
  bool rhs_diag_fresh = false;
  const SystemOperators* cur_ops = &res.ops;
  SystemOperators scratch_ops;

  const RhsFn rhsfn = [&](const NodalField& v, double tv) {
    if (problem.velocity.time_dependent()) {
      scratch_ops = assemble_system(mesh, problem.velocity, tv, scheme.diffusion);
      cur_ops = &scratch_ops;
    }
    rhs_diag = RhsDiagnostics{};
    NodalField L = scheme_rhs(v, tv, scheme, *cur_ops, mesh, problem.u_in, &rhs_diag);
    rhs_diag_fresh = true;
    return L;
  };

  const StageObserver observer = [&](const NodalField& vin, const NodalField& vout,
                                     double tv, int stage) {
    StageDiagnostics s;
    s.t = tv;
    s.step = step;
    s.stage = stage;
    const auto [mn, mx] = std::minmax_element(vout.values.begin(), vout.values.end());
    s.minU = *mn;
    s.maxU = *mx;
    s.lumpedNorm = lumped_norm(vout.values, cur_ops->mL);
    const LocalBounds bounds = local_bounds(vin, *cur_ops, problem.u_in(tv));
    s.maxBoundViolation = bounds_violation(bounds, vout);
    if (rhs_diag_fresh && rhs_diag.hasGcc) {
      s.gccLhs = rhs_diag.gcc.gccLhs;
      s.gccRhs = rhs_diag.gcc.gccRhs;
      s.alphaPlus = rhs_diag.gcc.alphaPlus;
      s.alphaMinus = rhs_diag.gcc.alphaMinus;
      s.gccRecorded = true;
    }
    s.partialStep = partial;
    res.stages.push_back(s);
  };

  for (double event : events) {
    if (time.T <= 0.0) break;
    const double anchor = t;
    int k = 0;
    while (t < event - tiny) {
      double t_next = anchor + (k + 1) * base_dt;
      if (t_next >= event - tiny) t_next = event;
      const double dt = t_next - t;
      partial = dt < base_dt * (1.0 - 1e-12);
      u = ssprk_step(u, t, dt, time.rk_order, rhsfn, observer);
      t = t_next;
      ++k;
      ++step;
      if (!all_finite(u)) throw DivergenceError(step, t);
    }
    while (next_snap < snaps.size() && snaps[next_snap] <= event + tiny) {
      record_snapshot(event);
      ++next_snap;
    }
  }

  u.time = time.T;
  res.finalLumpedNorm = lumped_norm(u.values, res.ops.mL);
  res.final = std::move(u);
  return res;
}

}  // namespace afc
