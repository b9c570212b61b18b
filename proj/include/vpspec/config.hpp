#pragma once

#include "vpspec/integrators.hpp"
#include "vpspec/scenarios.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vpspec {

/// Environment variable that replaces the configured output directory.
inline constexpr const char* output_dir_env = "VPSPEC_OUTPUT_DIR";

struct RunConfig {
    ScenarioConfig scenario = default_scenario(ScenarioKind::Manufactured);
    SchemeKind scheme = SchemeKind::BDF2;
    std::size_t N = 32;
    std::size_t M = 32;
    double dt = 0.01;
    double T = 1.0;
    std::optional<int> taylor_order;
    std::filesystem::path output_dir = "output";
    std::vector<double> snapshot_times;
    bool strict_cfl = false;
    bool neutrality_fix = false;

    StepOptions step_options() const;
};

/// One `key = value` assignment with a description of where it came from,
/// used in error messages.
struct ConfigEntry {
    std::string key;
    std::string value;
    std::string origin;
};

/// Reads `key = value` lines; '#' starts a comment. Throws ConfigError on
/// malformed lines or an unreadable file.
std::vector<ConfigEntry> read_config_entries(const std::filesystem::path& path);

/// Turns "--key=value" or "--key value" arguments into entries. Short aliases
/// (dt, T, N, M, scheme, ...) map to their full keys.
std::vector<ConfigEntry> parse_overrides(const std::vector<std::string>& args);

/// Builds a validated configuration. Later entries win over earlier ones;
/// the output-directory environment variable wins over the file but not over
/// an explicit override flag. Unknown keys are errors.
RunConfig build_config(const std::vector<ConfigEntry>& file_entries, const std::vector<ConfigEntry>& overrides = {},
                       bool apply_env = true);

RunConfig parse_config(const std::filesystem::path& path, const std::vector<std::string>& override_args = {});

/// Checks every invariant of a configuration. Throws ConfigError.
void validate(const RunConfig& cfg);

/// Full resolved configuration in canonical key order; reals carry 17
/// significant digits so the list can be read back unchanged.
std::vector<std::pair<std::string, std::string>> resolved_entries(const RunConfig& cfg);

} // namespace vpspec
