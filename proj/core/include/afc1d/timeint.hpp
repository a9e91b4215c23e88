#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "afc1d/problems.hpp"
#include "afc1d/schemes.hpp"

namespace afc {

struct TimeConfig {
  double nu = 0.25;  // CFL number: dt / min element length
  int rk_order = 2;  // SSP Runge-Kutta order, 1..3
  double T = 1.0;
  std::vector<double> snapshot_times;

  void validate() const;
};

// dt = nu * min element length. The driver shortens the final step so the
// run lands on T exactly.
double cfl_timestep(const Mesh1D& mesh, double nu);

using RhsFn = std::function<NodalField(const NodalField&, double)>;

// Observes each forward Euler stage: the stage input, the Euler result
// before any convex recombination, the stage time and the stage index.
using StageObserver =
    std::function<void(const NodalField&, const NodalField&, double, int)>;

// One SSP Runge-Kutta step (Shu-Osher convex combinations of forward Euler
// stages) of the given order.
NodalField ssprk_step(const NodalField& u, double t, double dt, int order,
                      const RhsFn& rhs, const StageObserver& observer = {});

struct DivergenceError : std::runtime_error {
  DivergenceError(int step, double t)
      : std::runtime_error("solution diverged (non-finite state) at step " +
                           std::to_string(step) + ", t = " + std::to_string(t)),
        step(step),
        time(t) {}
  int step;
  double time;
};

// One diagnostics record per forward Euler stage.
struct StageDiagnostics {
  double t = 0.0;
  int step = 0;
  int stage = 0;
  double minU = 0.0;
  double maxU = 0.0;
  double lumpedNorm = 0.0;
  double gccLhs = 0.0;
  double gccRhs = 0.0;
  double alphaPlus = 1.0;
  double alphaMinus = 1.0;
  bool gccRecorded = false;
  double maxBoundViolation = 0.0;
  bool partialStep = false;
};

struct RunResult {
  NodalField final;
  std::vector<StageDiagnostics> stages;
  std::vector<std::pair<double, NodalField>> snapshots;
  SystemOperators ops;
  double initialLumpedNorm = 0.0;
  double finalLumpedNorm = 0.0;
};

// Full experiment driver: interpolates the initial condition at the mesh
// nodes, steps to T with CFL-controlled SSP Runge-Kutta, and collects the
// per-stage diagnostics. Per-stage solution bounds are recomputed from each
// stage input. Throws DivergenceError when the state stops being finite.
RunResult run(const Mesh1D& mesh, const SchemeConfig& scheme,
              const TimeConfig& time, const Problem& problem);

}  // namespace afc
