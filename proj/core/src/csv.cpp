#include "afc1d/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace afc {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  return os;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_solution_csv(const std::filesystem::path& path,
                        const std::string& provenance, const Mesh1D& mesh,
                        const NodalField& u,
                        const std::function<double(double)>& exact) {
  auto os = open_out(path);
  os << "# " << provenance << '\n';
  os << "x,u_h,u_exact\n";
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    const double x = mesh.vertex(v);
    os << format_double(x) << ',' << format_double(u[mesh.dof_of_vertex(v)]) << ','
       << format_double(exact(x)) << '\n';
  }
}

void write_diagnostics_csv(const std::filesystem::path& path,
                           const std::string& provenance,
                           const std::vector<StageDiagnostics>& stages) {
  auto os = open_out(path);
  os << "# " << provenance << '\n';
  os << "t,min_u,max_u,lumped_norm,gcc_lhs,gcc_rhs,alpha_plus,alpha_minus,"
        "max_bound_violation\n";
  for (const auto& s : stages) {
    os << format_double(s.t) << ',' << format_double(s.minU) << ','
       << format_double(s.maxU) << ',' << format_double(s.lumpedNorm) << ','
       << format_double(s.gccLhs) << ',' << format_double(s.gccRhs) << ','
       << format_double(s.alphaPlus) << ',' << format_double(s.alphaMinus) << ','
       << format_double(s.maxBoundViolation) << '\n';
  }
}

void write_convergence_csv(const std::filesystem::path& path,
                           const std::string& provenance,
                           const std::vector<ConvergenceRecord>& records) {
  auto os = open_out(path);
  os << "# " << provenance << '\n';
  os << "N,h,error,eoc\n";
  for (const auto& r : records) {
    os << r.N << ',' << format_double(r.h) << ',' << format_double(r.l2Error)
       << ',' << (r.eoc ? format_double(*r.eoc) : std::string()) << '\n';
  }
}

void write_combined_csv(const std::filesystem::path& path,
                        const std::string& provenance,
                        const std::vector<std::string>& scheme_names,
                        const std::vector<std::vector<ConvergenceRecord>>& columns) {
  if (scheme_names.size() != columns.size() || columns.empty()) {
    throw std::invalid_argument("write_combined_csv: mismatched columns");
  }
  auto os = open_out(path);
  os << "# " << provenance << '\n';
  os << "N";
  for (const auto& name : scheme_names) {
    os << ',' << name << "_error," << name << "_eoc";
  }
  os << '\n';
  const std::size_t levels = columns.front().size();
  for (std::size_t k = 0; k < levels; ++k) {
    os << columns.front()[k].N;
    for (const auto& col : columns) {
      const auto& r = col[k];
      os << ',' << format_double(r.l2Error) << ','
         << (r.eoc ? format_double(*r.eoc) : std::string());
    }
    os << '\n';
  }
}

void write_mesh_csv(const std::filesystem::path& path,
                    const std::string& provenance, const Mesh1D& mesh) {
  auto os = open_out(path);
  os << "# " << provenance << '\n';
  os << "x\n";
  for (double x : mesh.vertices()) os << format_double(x) << '\n';
}

void write_manifest(const std::filesystem::path& path,
                    const std::vector<std::pair<std::string, std::string>>& entries) {
  auto os = open_out(path);
  for (const auto& [key, value] : entries) os << key << '=' << value << '\n';
}

}  // namespace afc
