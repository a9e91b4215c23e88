#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "afc1d/csv.hpp"
#include "afc1d/timeint.hpp"

namespace afc {

SchemeKind parse_scheme(const std::string& name);
std::string scheme_name(SchemeKind kind);
DiffusionVariant parse_diffusion_variant(const std::string& name);
StabilizationVariant parse_stabilization_variant(const std::string& name);

// Resolved parameters of a single advection run.
struct RunOptions {
  std::string problem = "twoprofile";
  std::string scheme = "mcl";
  int n_vertices = 101;
  double zeta = 0.0;
  std::uint64_t seed = 1;
  double nu = 0.25;
  int rk_order = 2;
  double omega = 1.0;
  double gamma = 0.4;
  std::string dvariant = "rusanov";
  std::string svariant = "loworder";
  std::optional<double> final_time;  // overrides the problem default
  std::string out_dir = ".";
  std::vector<double> snapshots;
  bool dump_mesh = false;
  bool dump_operators = false;
};

// Builds the mesh (perturbing a uniform one when zeta > 0), runs the
// configured scheme and writes solution.csv, diagnostics.csv, optional
// snapshot_<k>.csv files and manifest.txt into the output directory.
void run_command(const RunOptions& opt);

struct ConvergenceOptions {
  std::string problem = "coshump";
  std::vector<std::string> schemes = {"mcl"};
  std::vector<int> levels = {33, 65, 129, 257, 513};
  double zeta = 0.0;
  std::uint64_t seed = 1;
  double nu = 0.25;
  int rk_order = 2;
  double omega = 1.0;
  double gamma = 0.4;
  std::string dvariant = "rusanov";
  std::string svariant = "loworder";
  std::string out_dir = ".";
};

// Grid-convergence study over a bisection hierarchy: the coarsest mesh is
// perturbed once (when zeta > 0) and every finer level is obtained by
// midpoint refinement. Levels must satisfy N_{k+1} = 2 N_k - 1.
std::vector<Mesh1D> build_hierarchy(const Problem& problem,
                                    const std::vector<int>& levels, double zeta,
                                    std::uint64_t seed);

struct SchemeRunStats {
  std::vector<ConvergenceRecord> records;
  int gccViolations = 0;         // stages with gcc_lhs > gcc_rhs + 1e-12
  double maxGccExcess = 0.0;     // max over stages of gcc_lhs - gcc_rhs
  double minAlphaPlus = 1.0;     // min over stages of the global factors
  double minAlphaMinus = 1.0;
  double maxBoundViolation = 0.0;
};

SchemeRunStats convergence_study(const Problem& problem, const SchemeConfig& cfg,
                                 double nu, int rk_order,
                                 const std::vector<Mesh1D>& meshes);

// Writes one convergence_<scheme>.csv per scheme plus combined.csv and
// manifest.txt.
void convergence_command(const ConvergenceOptions& opt);

}  // namespace afc
