#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "afc1d/experiments.hpp"

using namespace afc;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "afc1d_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("name parsing round trips and rejects unknowns") {
  for (const std::string name : {"gc", "gs", "lf", "mcl", "mc0", "ce"}) {
    CHECK(scheme_name(parse_scheme(name)) == name);
  }
  CHECK_THROWS_AS(parse_scheme("weno"), std::invalid_argument);
  CHECK(parse_diffusion_variant("rusanov") == DiffusionVariant::Rusanov);
  CHECK(parse_diffusion_variant("upwind") == DiffusionVariant::DiscreteUpwinding);
  CHECK_THROWS_AS(parse_diffusion_variant("none"), std::invalid_argument);
  CHECK(parse_stabilization_variant("loworder") == StabilizationVariant::LowOrder);
  CHECK(parse_stabilization_variant("biharmonic") ==
        StabilizationVariant::Biharmonic);
  CHECK_THROWS_AS(parse_stabilization_variant("x"), std::invalid_argument);
}

TEST_CASE("hierarchy construction perturbs once and bisects") {
  const Problem p = problem_by_name("coshump");
  const auto meshes = build_hierarchy(p, {33, 65, 129}, 0.5, 7);
  REQUIRE(meshes.size() == 3);
  CHECK(meshes[0].num_vertices() == 33);
  CHECK(meshes[2].num_vertices() == 129);
  // the coarse vertices are embedded bitwise in every finer level
  for (int v = 0; v < 33; ++v) {
    CHECK(meshes[1].vertex(2 * v) == meshes[0].vertex(v));
    CHECK(meshes[2].vertex(4 * v) == meshes[0].vertex(v));
  }
  CHECK_THROWS_AS(build_hierarchy(p, {33, 64}, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_hierarchy(p, {}, 0.0, 1), std::invalid_argument);
}

TEST_CASE("run command writes the documented files") {
  const fs::path dir = fresh_dir("run_files");
  RunOptions ro;
  ro.problem = "coshump";
  ro.scheme = "mcl";
  ro.n_vertices = 33;
  ro.out_dir = dir.string();
  ro.snapshots = {0.25};
  ro.dump_mesh = true;
  ro.dump_operators = true;
  run_command(ro);

  const std::string solution = slurp(dir / "solution.csv");
  CHECK(solution.rfind("# afc1d run", 0) == 0);
  CHECK(solution.find("x,u_h,u_exact") != std::string::npos);
  CHECK(count_lines(solution) == 2 + 33);  // comment + header + one row per vertex

  const std::string diag = slurp(dir / "diagnostics.csv");
  CHECK(diag.find("t,min_u,max_u,lumped_norm,gcc_lhs,gcc_rhs,alpha_plus,"
                  "alpha_minus,max_bound_violation") != std::string::npos);
  // 0.5 / (0.25 / 32) = 64 steps, 2 stages each
  CHECK(count_lines(diag) == 2 + 128);

  CHECK(fs::exists(dir / "snapshot_1.csv"));
  CHECK(fs::exists(dir / "mesh.csv"));
  CHECK(fs::exists(dir / "operators.txt"));
  CHECK(count_lines(slurp(dir / "mesh.csv")) == 2 + 33);

  const std::string manifest = slurp(dir / "manifest.txt");
  CHECK(manifest.find("problem=coshump") != std::string::npos);
  CHECK(manifest.find("scheme=mcl") != std::string::npos);
  CHECK(manifest.find("N=33") != std::string::npos);
  CHECK(manifest.find("T=0.5") != std::string::npos);
}

TEST_CASE("identical options produce identical bytes") {
  RunOptions ro;
  ro.problem = "twoprofile";
  ro.scheme = "ce";
  ro.n_vertices = 33;
  ro.zeta = 0.3;
  ro.seed = 9;
  const fs::path d1 = fresh_dir("det1");
  const fs::path d2 = fresh_dir("det2");
  ro.out_dir = d1.string();
  run_command(ro);
  ro.out_dir = d2.string();
  run_command(ro);
  CHECK(slurp(d1 / "solution.csv") == slurp(d2 / "solution.csv"));
  CHECK(slurp(d1 / "diagnostics.csv") == slurp(d2 / "diagnostics.csv"));
}

TEST_CASE("manifest parameters reproduce the run") {
  const fs::path d1 = fresh_dir("manifest1");
  RunOptions ro;
  ro.problem = "coshump";
  ro.scheme = "mc0";
  ro.n_vertices = 33;
  ro.zeta = 0.2;
  ro.seed = 4;
  ro.nu = 0.2;
  ro.out_dir = d1.string();
  run_command(ro);

  // parse the manifest back into options
  RunOptions replay;
  std::istringstream is(slurp(d1 / "manifest.txt"));
  std::string line;
  while (std::getline(is, line)) {
    const auto eq = line.find('=');
    REQUIRE(eq != std::string::npos);
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "problem") replay.problem = value;
    if (key == "scheme") replay.scheme = value;
    if (key == "N") replay.n_vertices = std::stoi(value);
    if (key == "zeta") replay.zeta = std::stod(value);
    if (key == "seed") replay.seed = std::stoull(value);
    if (key == "nu") replay.nu = std::stod(value);
    if (key == "rk") replay.rk_order = std::stoi(value);
    if (key == "omega") replay.omega = std::stod(value);
    if (key == "gamma") replay.gamma = std::stod(value);
    if (key == "dvariant") replay.dvariant = value;
    if (key == "svariant") replay.svariant = value;
    if (key == "T") replay.final_time = std::stod(value);
  }
  const fs::path d2 = fresh_dir("manifest2");
  replay.out_dir = d2.string();
  run_command(replay);
  CHECK(slurp(d1 / "solution.csv") == slurp(d2 / "solution.csv"));
  CHECK(slurp(d1 / "diagnostics.csv") == slurp(d2 / "diagnostics.csv"));
}

TEST_CASE("convergence command writes per-scheme tables and a combined one") {
  const fs::path dir = fresh_dir("conv_files");
  ConvergenceOptions co;
  co.problem = "coshump";
  co.schemes = {"lf", "mcl"};
  co.levels = {33, 65};
  co.out_dir = dir.string();
  convergence_command(co);

  const std::string lf = slurp(dir / "convergence_lf.csv");
  CHECK(lf.find("N,h,error,eoc") != std::string::npos);
  CHECK(count_lines(lf) == 2 + 2);

  const std::string combined = slurp(dir / "combined.csv");
  CHECK(combined.find("N,lf_error,lf_eoc,mcl_error,mcl_eoc") != std::string::npos);
  // first data row carries empty eoc fields
  std::istringstream is(combined);
  std::string line;
  std::getline(is, line);  // comment
  std::getline(is, line);  // header
  std::getline(is, line);  // N = 33
  CHECK(line.rfind("33,", 0) == 0);
  CHECK(line.back() == ',');
  CHECK(fs::exists(dir / "manifest.txt"));
}

TEST_CASE("convergence study records per-stage limiter statistics") {
  const Problem p = problem_by_name("coshump");
  const auto meshes = build_hierarchy(p, {33, 65}, 0.0, 1);
  SchemeConfig cfg;
  cfg.kind = SchemeKind::CE;
  const SchemeRunStats stats = convergence_study(p, cfg, 0.25, 2, meshes);
  REQUIRE(stats.records.size() == 2);
  CHECK(stats.records[0].N == 33);
  CHECK(stats.records[1].eoc.has_value());
  CHECK(stats.gccViolations == 0);
  CHECK(stats.minAlphaPlus == 1.0);
  CHECK(stats.minAlphaMinus == 1.0);
  CHECK(stats.maxBoundViolation <= 1e-12);
}
