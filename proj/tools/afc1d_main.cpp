#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "afc1d/experiments.hpp"

namespace {

const std::vector<std::string> kSchemes = {"gc", "gs", "lf", "mcl", "mc0", "ce"};
const std::vector<std::string> kProblems = {"twoprofile", "coshump"};
const std::vector<std::string> kDiffusion = {"rusanov", "upwind"};
const std::vector<std::string> kStabilization = {"loworder", "biharmonic"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flux-corrected P1 finite element solver for 1D linear advection"};
  app.require_subcommand(1);

  afc::RunOptions ro;
  double run_T = -1.0;
  auto* run = app.add_subcommand(
      "run", "Advect a profile and write solution/diagnostics CSV files");
  run->add_option("--problem", ro.problem, "Test problem")
      ->check(CLI::IsMember(kProblems));
  run->add_option("--scheme", ro.scheme, "Spatial scheme")
      ->check(CLI::IsMember(kSchemes));
  run->add_option("--N", ro.n_vertices, "Number of mesh vertices")
      ->check(CLI::Range(3, 1 << 24));
  run->add_option("--zeta", ro.zeta, "Relative mesh perturbation in [0,1)");
  run->add_option("--seed", ro.seed, "Perturbation RNG seed");
  run->add_option("--nu", ro.nu, "CFL number");
  run->add_option("--rk", ro.rk_order, "SSP Runge-Kutta order")
      ->check(CLI::IsMember({1, 2, 3}));
  run->add_option("--omega", ro.omega, "Dissipative potential weight in [0,1]");
  run->add_option("--gamma", ro.gamma, "Coercivity constant in (0,1), CE only");
  run->add_option("--dvariant", ro.dvariant, "Artificial diffusion variant")
      ->check(CLI::IsMember(kDiffusion));
  run->add_option("--svariant", ro.svariant, "Dissipative potential variant")
      ->check(CLI::IsMember(kStabilization));
  run->add_option("--T", run_T, "Final time override");
  run->add_option("--out", ro.out_dir, "Output directory")->envname("AFC1D_OUT");
  run->add_option("--snapshots", ro.snapshots, "Snapshot times (comma separated)")
      ->delimiter(',');
  run->add_flag("--dump-mesh", ro.dump_mesh, "Also write mesh.csv");
  run->add_flag("--dump-operators", ro.dump_operators,
                "Also write the assembled operators in coordinate format");

  afc::ConvergenceOptions co;
  auto* conv = app.add_subcommand(
      "convergence", "Grid-convergence study on a bisection hierarchy");
  conv->add_option("--problem", co.problem, "Test problem")
      ->check(CLI::IsMember(kProblems));
  conv->add_option("--scheme", co.schemes, "Scheme (repeatable)")
      ->check(CLI::IsMember(kSchemes));
  conv->add_option("--levels", co.levels, "Vertex counts, N' = 2N - 1 chain")
      ->delimiter(',');
  conv->add_option("--zeta", co.zeta, "Relative perturbation of the coarsest mesh");
  conv->add_option("--seed", co.seed, "Perturbation RNG seed");
  conv->add_option("--nu", co.nu, "CFL number");
  conv->add_option("--rk", co.rk_order, "SSP Runge-Kutta order")
      ->check(CLI::IsMember({1, 2, 3}));
  conv->add_option("--omega", co.omega, "Dissipative potential weight in [0,1]");
  conv->add_option("--gamma", co.gamma, "Coercivity constant in (0,1), CE only");
  conv->add_option("--dvariant", co.dvariant, "Artificial diffusion variant")
      ->check(CLI::IsMember(kDiffusion));
  conv->add_option("--svariant", co.svariant, "Dissipative potential variant")
      ->check(CLI::IsMember(kStabilization));
  conv->add_option("--out", co.out_dir, "Output directory")->envname("AFC1D_OUT");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (run->count("--gamma") && ro.scheme != "ce") {
        std::cerr << "warning: --gamma only affects the ce scheme; ignored\n";
      }
      if (run->count("--omega") &&
          (ro.scheme == "gc" || ro.scheme == "lf" || ro.scheme == "mc0")) {
        std::cerr << "warning: --omega has no effect for scheme " << ro.scheme
                  << "; ignored\n";
      }
      if (run_T >= 0.0) ro.final_time = run_T;
      afc::run_command(ro);
    } else {
      if (conv->count("--gamma") &&
          std::find(co.schemes.begin(), co.schemes.end(), "ce") ==
              co.schemes.end()) {
        std::cerr << "warning: --gamma only affects the ce scheme; ignored\n";
      }
      afc::convergence_command(co);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
