#pragma once

#include <functional>
#include <optional>

#include "afc1d/assembly.hpp"
#include "afc1d/fields.hpp"
#include "afc1d/limiter.hpp"

namespace afc {

enum class SchemeKind {
  GC,   // consistent-mass Galerkin
  GS,   // unlimited target scheme with stabilized time derivatives
  LF,   // low-order algebraic Lax-Friedrichs
  MCL,  // monolithic convex limiting of the stabilized target flux
  MC0,  // monolithic convex limiting with zero flux potentials
  CE,   // coercivity-enforcing variant of MCL
};

enum class StabilizationVariant { LowOrder, Biharmonic };

struct SchemeConfig {
  SchemeKind kind = SchemeKind::MCL;
  double omega = 1.0;  // weight of the dissipative flux potential
  double gamma = 0.4;  // coercivity constant (CE only)
  DiffusionVariant diffusion = DiffusionVariant::Rusanov;
  StabilizationVariant stabilization = StabilizationVariant::LowOrder;

  void validate() const;
};

// Inflow datum as a function of time.
using InflowDatum = std::function<double(double)>;

// Per-evaluation limiter statistics, filled on request by scheme_rhs.
struct RhsDiagnostics {
  CoercivityReport gcc;
  bool hasGcc = false;
  std::optional<double> alphaBar;
  std::optional<double> alphaDotBar;
};

// Semi-discrete right-hand side du/dt for the configured scheme, with the
// operators assembled for time t. GC solves the consistent-mass system; all
// other schemes divide by the lumped masses.
NodalField scheme_rhs(const NodalField& u, double t, const SchemeConfig& cfg,
                      const SystemOperators& ops, const Mesh1D& mesh,
                      const InflowDatum& u_in, RhsDiagnostics* diag = nullptr);

// Assembles du/dt once through the limited bar states and once through the
// flux form and returns the maximum absolute discrepancy. The two routes
// are algebraically identical; the discrepancy measures roundoff only.
// Valid for the flux-corrected schemes MCL, MC0 and CE.
double equivalence_check(const NodalField& u, double t, const SchemeConfig& cfg,
                         const SystemOperators& ops, const Mesh1D& mesh,
                         const InflowDatum& u_in);

}  // namespace afc
