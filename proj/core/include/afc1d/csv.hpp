#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "afc1d/diagnostics.hpp"
#include "afc1d/timeint.hpp"

namespace afc {

// Round-trip-exact decimal rendering of a double (17 significant digits);
// all CSV output goes through this so identical runs produce identical
// bytes.
std::string format_double(double v);

// Every file starts with a '#'-prefixed provenance comment followed by a
// header row.
void write_solution_csv(const std::filesystem::path& path,
                        const std::string& provenance, const Mesh1D& mesh,
                        const NodalField& u,
                        const std::function<double(double)>& exact);

void write_diagnostics_csv(const std::filesystem::path& path,
                           const std::string& provenance,
                           const std::vector<StageDiagnostics>& stages);

void write_convergence_csv(const std::filesystem::path& path,
                           const std::string& provenance,
                           const std::vector<ConvergenceRecord>& records);

void write_combined_csv(const std::filesystem::path& path,
                        const std::string& provenance,
                        const std::vector<std::string>& scheme_names,
                        const std::vector<std::vector<ConvergenceRecord>>& columns);

void write_mesh_csv(const std::filesystem::path& path,
                    const std::string& provenance, const Mesh1D& mesh);

void write_manifest(const std::filesystem::path& path,
                    const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace afc
