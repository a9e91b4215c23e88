#include <benchmark/benchmark.h>

#include "afc1d/experiments.hpp"
#include "afc1d/linear_solvers.hpp"

namespace {

using namespace afc;

struct Setup {
  Problem problem = problem_coshump();
  Mesh1D mesh;
  SystemOperators ops;
  NodalField u;

  explicit Setup(int n_vertices)
      : mesh(Mesh1D::uniform(n_vertices, 1.0, problem.boundary)),
        ops(assemble_system(mesh, problem.velocity, 0.0,
                            DiffusionVariant::Rusanov)),
        u(mesh.num_unknowns(), 0.0, 0.0) {
    for (int i = 0; i < mesh.num_unknowns(); ++i) u[i] = problem.u0(mesh.vertex(i));
  }
};

SchemeConfig config(SchemeKind kind) {
  SchemeConfig cfg;
  cfg.kind = kind;
  return cfg;
}

void BM_Assembly(benchmark::State& state) {
  const Setup s(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_system(s.mesh, s.problem.velocity, 0.0,
                                             DiffusionVariant::Rusanov));
  }
}
BENCHMARK(BM_Assembly)->Arg(513);

template <SchemeKind kind>
void BM_SchemeRhs(benchmark::State& state) {
  const Setup s(static_cast<int>(state.range(0)));
  const SchemeConfig cfg = config(kind);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        scheme_rhs(s.u, 0.0, cfg, s.ops, s.mesh, s.problem.u_in));
  }
}
BENCHMARK(BM_SchemeRhs<SchemeKind::LF>)->Arg(513);
BENCHMARK(BM_SchemeRhs<SchemeKind::GS>)->Arg(513);
BENCHMARK(BM_SchemeRhs<SchemeKind::GC>)->Arg(513);
BENCHMARK(BM_SchemeRhs<SchemeKind::MCL>)->Arg(513);
BENCHMARK(BM_SchemeRhs<SchemeKind::CE>)->Arg(513);

void BM_MassSolve(benchmark::State& state) {
  const Problem p = problem_twoprofile();
  const Mesh1D mesh =
      Mesh1D::uniform(static_cast<int>(state.range(0)), 1.0, p.boundary);
  auto [Mc, mL] = assemble_mass(mesh);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mass_solve(Mc, mL, mesh.boundary()));
  }
}
BENCHMARK(BM_MassSolve)->Arg(513);

void BM_CeLimit(benchmark::State& state) {
  const Setup s(static_cast<int>(state.range(0)));
  const std::vector<double> b = s.ops.inflow.assemble(s.ops.size(), 0.0);
  NodalField udot = advective_potential(s.u, s.ops, b);
  const NodalField ud = dissipative_potential_loworder(s.u, s.ops, 1.0);
  for (std::size_t i = 0; i < udot.size(); ++i) udot[i] += ud[i];
  EdgeFluxSet edges = make_edge_flux_set(s.ops);
  raw_fluxes(s.u, udot, s.ops, edges);
  bar_states(s.u, s.ops, edges);
  const LocalBounds bounds = local_bounds(s.u, s.ops, 0.0);
  for (auto _ : state) {
    EdgeFluxSet work = edges;
    benchmark::DoNotOptimize(
        ce_limit(work, bounds, s.ops, s.u, udot, 0.4, s.mesh.max_spacing()));
  }
}
BENCHMARK(BM_CeLimit)->Arg(513);

void BM_FullStep(benchmark::State& state) {
  const Setup s(static_cast<int>(state.range(0)));
  const SchemeConfig cfg = config(SchemeKind::MCL);
  const double dt = cfl_timestep(s.mesh, 0.25);
  const RhsFn rhs = [&](const NodalField& v, double t) {
    return scheme_rhs(v, t, cfg, s.ops, s.mesh, s.problem.u_in);
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(ssprk_step(s.u, 0.0, dt, 2, rhs));
  }
}
BENCHMARK(BM_FullStep)->Arg(513);

void BM_L2Error(benchmark::State& state) {
  const Setup s(static_cast<int>(state.range(0)));
  const auto exact = [&](double x) { return s.problem.exact(x, 0.0); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(l2_error(s.u, s.mesh, exact));
  }
}
BENCHMARK(BM_L2Error)->Arg(513);

}  // namespace

BENCHMARK_MAIN();
