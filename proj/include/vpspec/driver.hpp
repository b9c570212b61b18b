#pragma once

#include "vpspec/config.hpp"
#include "vpspec/diagnostics.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace vpspec {

inline constexpr const char* diagnostics_header = "t,Q,P,energy,first_mode_a1,first_mode_abs,cfl_ok";

struct RunSummary {
    std::int64_t steps = 0;
    DiagnosticsRecord initial;
    DiagnosticsRecord final;
    std::int64_t cfl_violations = 0;
    std::vector<std::filesystem::path> snapshots;
};

void write_diagnostics_row(std::ostream& os, const DiagnosticsRecord& rec);

/// Writes the run manifest: library version followed by resolved_entries().
void write_manifest(std::ostream& os, const RunConfig& cfg);

/// Runs one configuration, writing diagnostics.csv, run_manifest.txt and the
/// requested snapshots into cfg.output_dir. Throws IoError, NumericalError or
/// ConfigError.
RunSummary run_simulation(const RunConfig& cfg);

struct ConvergenceRow {
    SchemeKind scheme = SchemeKind::Euler1;
    double dt = 0.0;
    std::int64_t steps = 0;
    double f_error = 0.0;
    std::optional<double> f_rate;
    double e_error = 0.0;
    std::optional<double> e_rate;
};

/// Manufactured run of one scheme to cfg.T; relative L² errors of f and E
/// against the exact solution.
ConvergenceRow convergence_point(const RunConfig& cfg, SchemeKind scheme, double dt);

/// Every scheme on every dt of the strictly decreasing ladder. Rows are
/// grouped by scheme in ladder order; rates are log2(e_prev / e_curr).
std::vector<ConvergenceRow> convergence_study(const RunConfig& base, const std::vector<double>& dts,
                                              const std::vector<SchemeKind>& schemes);

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

/// convergence_study plus convergence.csv and run_manifest.txt in
/// base.output_dir. Returns the path of the table.
std::filesystem::path run_convergence_study(const RunConfig& base, const std::vector<double>& dts,
                                            const std::vector<SchemeKind>& schemes);

} // namespace vpspec
