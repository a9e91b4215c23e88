#include "afc1d/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace afc {

SchemeKind parse_scheme(const std::string& name) {
  if (name == "gc") return SchemeKind::GC;
  if (name == "gs") return SchemeKind::GS;
  if (name == "lf") return SchemeKind::LF;
  if (name == "mcl") return SchemeKind::MCL;
  if (name == "mc0") return SchemeKind::MC0;
  if (name == "ce") return SchemeKind::CE;
  throw std::invalid_argument("unknown scheme: " + name);
}

std::string scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::GC: return "gc";
    case SchemeKind::GS: return "gs";
    case SchemeKind::LF: return "lf";
    case SchemeKind::MCL: return "mcl";
    case SchemeKind::MC0: return "mc0";
    case SchemeKind::CE: return "ce";
  }
  throw std::invalid_argument("unknown scheme kind");
}

DiffusionVariant parse_diffusion_variant(const std::string& name) {
  if (name == "rusanov") return DiffusionVariant::Rusanov;
  if (name == "upwind") return DiffusionVariant::DiscreteUpwinding;
  throw std::invalid_argument("unknown diffusion variant: " + name);
}

StabilizationVariant parse_stabilization_variant(const std::string& name) {
  if (name == "loworder") return StabilizationVariant::LowOrder;
  if (name == "biharmonic") return StabilizationVariant::Biharmonic;
  throw std::invalid_argument("unknown stabilization variant: " + name);
}

namespace {

SchemeConfig make_scheme_config(const std::string& scheme, double omega,
                                double gamma, const std::string& dvariant,
                                const std::string& svariant) {
  SchemeConfig cfg;
  cfg.kind = parse_scheme(scheme);
  cfg.omega = omega;
  cfg.gamma = gamma;
  cfg.diffusion = parse_diffusion_variant(dvariant);
  cfg.stabilization = parse_stabilization_variant(svariant);
  cfg.validate();
  return cfg;
}

std::string join_doubles(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += format_double(v[i]);
  }
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_strings(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += v[i];
  }
  return s;
}

}  // namespace

void run_command(const RunOptions& opt) {
  const Problem problem = problem_by_name(opt.problem);
  const SchemeConfig cfg = make_scheme_config(opt.scheme, opt.omega, opt.gamma,
                                              opt.dvariant, opt.svariant);
  Mesh1D mesh = Mesh1D::uniform(opt.n_vertices, problem.length, problem.boundary);
  if (opt.zeta != 0.0) mesh = mesh.perturbed(opt.zeta, opt.seed);

  TimeConfig time;
  time.nu = opt.nu;
  time.rk_order = opt.rk_order;
  time.T = opt.final_time.value_or(problem.T);
  time.snapshot_times = opt.snapshots;

  const RunResult result = run(mesh, cfg, time, problem);

  const std::filesystem::path out(opt.out_dir);
  std::filesystem::create_directories(out);

  std::vector<std::pair<std::string, std::string>> manifest = {
      {"command", "run"},
      {"problem", opt.problem},
      {"scheme", opt.scheme},
      {"N", std::to_string(opt.n_vertices)},
      {"zeta", format_double(opt.zeta)},
      {"seed", std::to_string(opt.seed)},
      {"nu", format_double(opt.nu)},
      {"rk", std::to_string(opt.rk_order)},
      {"omega", format_double(opt.omega)},
      {"gamma", format_double(opt.gamma)},
      {"dvariant", opt.dvariant},
      {"svariant", opt.svariant},
      {"T", format_double(time.T)},
      {"snapshots", join_doubles(opt.snapshots)},
      {"out", opt.out_dir},
  };

  std::string provenance = "afc1d run";
  for (const auto& [k, v] : manifest) {
    if (k == "command" || k == "out") continue;
    provenance += ' ' + k + '=' + v;
  }

  const auto exact_at = [&](double t) {
    return [&problem, t](double x) { return problem.exact(x, t); };
  };
  write_solution_csv(out / "solution.csv", provenance, mesh, result.final,
                     exact_at(time.T));
  write_diagnostics_csv(out / "diagnostics.csv", provenance, result.stages);
  for (std::size_t k = 0; k < result.snapshots.size(); ++k) {
    const auto& [t, u] = result.snapshots[k];
    write_solution_csv(out / ("snapshot_" + std::to_string(k + 1) + ".csv"),
                       provenance + " t=" + format_double(t), mesh, u,
                       exact_at(t));
  }
  if (opt.dump_mesh) write_mesh_csv(out / "mesh.csv", provenance, mesh);
  if (opt.dump_operators) {
    std::ofstream os(out / "operators.txt", std::ios::binary | std::ios::trunc);
    os << "# " << provenance << "\n# mass\n";
    result.ops.Mc.dump_coordinate(os);
    os << "# advection\n";
    result.ops.A.dump_coordinate(os);
    os << "# diffusion\n";
    result.ops.D.dump_coordinate(os);
  }
  write_manifest(out / "manifest.txt", manifest);
}

std::vector<Mesh1D> build_hierarchy(const Problem& problem,
                                    const std::vector<int>& levels, double zeta,
                                    std::uint64_t seed) {
  if (levels.empty()) throw std::invalid_argument("hierarchy: no levels");
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (levels[k] != 2 * levels[k - 1] - 1) {
      throw std::invalid_argument(
          "hierarchy: levels must form a bisection chain (N' = 2N - 1)");
    }
  }
  std::vector<Mesh1D> meshes;
  Mesh1D base = Mesh1D::uniform(levels[0], problem.length, problem.boundary);
  if (zeta != 0.0) base = base.perturbed(zeta, seed);
  meshes.push_back(base);
  for (std::size_t k = 1; k < levels.size(); ++k) {
    meshes.push_back(meshes.back().refined());
  }
  return meshes;
}

SchemeRunStats convergence_study(const Problem& problem, const SchemeConfig& cfg,
                                 double nu, int rk_order,
                                 const std::vector<Mesh1D>& meshes) {
  SchemeRunStats stats;
  TimeConfig time;
  time.nu = nu;
  time.rk_order = rk_order;
  time.T = problem.T;
  for (const Mesh1D& mesh : meshes) {
    const RunResult result = run(mesh, cfg, time, problem);
    ConvergenceRecord rec;
    rec.N = mesh.num_vertices();
    rec.h = mesh.max_spacing();
    rec.l2Error = l2_error(result.final, mesh, [&](double x) {
      return problem.exact(x, time.T);
    });
    stats.records.push_back(rec);
    for (const auto& s : result.stages) {
      if (s.gccRecorded) {
        if (s.gccLhs > s.gccRhs + 1e-12) ++stats.gccViolations;
        stats.maxGccExcess = std::max(stats.maxGccExcess, s.gccLhs - s.gccRhs);
        stats.minAlphaPlus = std::min(stats.minAlphaPlus, s.alphaPlus);
        stats.minAlphaMinus = std::min(stats.minAlphaMinus, s.alphaMinus);
      }
      stats.maxBoundViolation =
          std::max(stats.maxBoundViolation, s.maxBoundViolation);
    }
  }
  stats.records = attach_eoc(std::move(stats.records));
  return stats;
}

void convergence_command(const ConvergenceOptions& opt) {
  const Problem problem = problem_by_name(opt.problem);
  const std::vector<Mesh1D> meshes =
      build_hierarchy(problem, opt.levels, opt.zeta, opt.seed);

  const std::filesystem::path out(opt.out_dir);
  std::filesystem::create_directories(out);

  std::vector<std::pair<std::string, std::string>> manifest = {
      {"command", "convergence"},
      {"problem", opt.problem},
      {"schemes", join_strings(opt.schemes)},
      {"levels", join_ints(opt.levels)},
      {"zeta", format_double(opt.zeta)},
      {"seed", std::to_string(opt.seed)},
      {"nu", format_double(opt.nu)},
      {"rk", std::to_string(opt.rk_order)},
      {"omega", format_double(opt.omega)},
      {"gamma", format_double(opt.gamma)},
      {"dvariant", opt.dvariant},
      {"svariant", opt.svariant},
      {"out", opt.out_dir},
  };
  std::string provenance = "afc1d convergence";
  for (const auto& [k, v] : manifest) {
    if (k == "command" || k == "out") continue;
    provenance += ' ' + k + '=' + v;
  }

  std::vector<std::vector<ConvergenceRecord>> columns;
  for (const std::string& scheme : opt.schemes) {
    const SchemeConfig cfg = make_scheme_config(scheme, opt.omega, opt.gamma,
                                                opt.dvariant, opt.svariant);
    const SchemeRunStats stats =
        convergence_study(problem, cfg, opt.nu, opt.rk_order, meshes);
    write_convergence_csv(out / ("convergence_" + scheme + ".csv"), provenance,
                          stats.records);
    columns.push_back(stats.records);
  }
  write_combined_csv(out / "combined.csv", provenance, opt.schemes, columns);
  write_manifest(out / "manifest.txt", manifest);
}

}  // namespace afc
