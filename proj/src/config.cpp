#include "vpspec/config.hpp"

#include "vpspec/errors.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <string_view>
#include <system_error>

namespace vpspec {

namespace {

const std::map<std::string, std::string, std::less<>>& aliases() {
    static const std::map<std::string, std::string, std::less<>> table{
        {"dt", "time.dt"},
        {"T", "time.T"},
        {"N", "grid.N"},
        {"M", "grid.M"},
        {"scheme", "time.scheme"},
        {"taylor_order", "time.taylor_order"},
        {"output_dir", "output.dir"},
        {"snapshots", "output.snapshot_times"},
        {"strict_cfl", "time.strict_cfl"},
        {"neutrality_fix", "field.project_mean"},
        {"scenario", "scenario.kind"},
    };
    return table;
}

const std::set<std::string, std::less<>>& known_keys() {
    static const std::set<std::string, std::less<>> keys{
        "scenario.kind",  "scenario.x_min",   "scenario.x_max",         "scenario.v_min",
        "scenario.v_max", "scenario.alpha",   "scenario.beta",          "scenario.epsilon",
        "scenario.gamma", "scenario.kappa",   "scenario.file",          "grid.N",
        "grid.M",         "time.dt",          "time.T",                 "time.scheme",
        "time.taylor_order", "time.strict_cfl", "output.dir",           "output.snapshot_times",
        "field.project_mean",
    };
    return keys;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string canonical_key(std::string_view key) {
    if (auto it = aliases().find(key); it != aliases().end()) return it->second;
    return std::string(key);
}

[[noreturn]] void bad_value(const ConfigEntry& e, std::string_view expected) {
    throw ConfigError(fmt::format("{}: {} = '{}' is not {}", e.origin, e.key, e.value, expected));
}

double to_real(const ConfigEntry& e) {
    const std::string_view s = trim(e.value);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value))
        bad_value(e, "a finite real number");
    return value;
}

long long to_integer(const ConfigEntry& e) {
    const std::string_view s = trim(e.value);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) bad_value(e, "an integer");
    return value;
}

std::size_t to_count(const ConfigEntry& e) {
    const long long v = to_integer(e);
    if (v <= 0) bad_value(e, "a positive integer");
    return static_cast<std::size_t>(v);
}

bool to_bool(const ConfigEntry& e) {
    std::string s(trim(e.value));
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    bad_value(e, "a boolean");
}

std::vector<double> to_real_list(const ConfigEntry& e) {
    std::vector<double> out;
    std::string_view rest = e.value;
    while (!trim(rest).empty()) {
        const auto comma = rest.find(',');
        ConfigEntry item{e.key, std::string(trim(rest.substr(0, comma))), e.origin};
        out.push_back(to_real(item));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

bool is_integer_multiple(double value, double step) {
    const double ratio = value / step;
    const double k = std::round(ratio);
    return k >= 0.0 && std::abs(ratio - k) <= 1e-9 * std::max(1.0, k);
}

std::string real(double v) { return fmt::format("{:.17g}", v); }

} // namespace

StepOptions RunConfig::step_options() const {
    StepOptions opts;
    opts.taylor_order = taylor_order.value_or(0);
    opts.strict_cfl = strict_cfl;
    opts.field.project_mean = neutrality_fix;
    return opts;
}

std::vector<ConfigEntry> read_config_entries(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError(fmt::format("cannot open config file {}", path.string()));
    std::vector<ConfigEntry> entries;
    std::string line;
    for (int lineno = 1; std::getline(is, line); ++lineno) {
        std::string_view text = line;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        const std::string origin = fmt::format("{}:{}", path.string(), lineno);
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) throw ConfigError(fmt::format("{}: expected 'key = value'", origin));
        const auto key = trim(text.substr(0, eq));
        if (key.empty()) throw ConfigError(fmt::format("{}: missing key", origin));
        entries.push_back({canonical_key(key), std::string(trim(text.substr(eq + 1))), origin});
    }
    if (is.bad()) throw ConfigError(fmt::format("failed reading config file {}", path.string()));
    return entries;
}

std::vector<ConfigEntry> parse_overrides(const std::vector<std::string>& args) {
    std::vector<ConfigEntry> entries;
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string_view arg = args[i];
        if (!arg.starts_with("--") || arg.size() == 2)
            throw ConfigError(fmt::format("unexpected argument '{}' (overrides look like --key=value)", arg));
        arg.remove_prefix(2);
        const std::string origin = fmt::format("flag --{}", arg.substr(0, arg.find('=')));
        if (const auto eq = arg.find('='); eq != std::string_view::npos) {
            entries.push_back({canonical_key(arg.substr(0, eq)), std::string(arg.substr(eq + 1)), origin});
        } else {
            if (i + 1 >= args.size()) throw ConfigError(fmt::format("{}: missing value", origin));
            entries.push_back({canonical_key(arg), args[++i], origin});
        }
    }
    return entries;
}

RunConfig build_config(const std::vector<ConfigEntry>& file_entries, const std::vector<ConfigEntry>& overrides,
                       bool apply_env) {
    std::map<std::string, ConfigEntry, std::less<>> merged;
    for (const auto* list : {&file_entries, &overrides}) {
        for (const auto& e : *list) {
            if (!known_keys().contains(e.key)) throw ConfigError(fmt::format("{}: unknown key '{}'", e.origin, e.key));
            merged[e.key] = e;
        }
    }
    const bool dir_flag = std::any_of(overrides.begin(), overrides.end(),
                                      [](const ConfigEntry& e) { return e.key == "output.dir"; });
    if (apply_env && !dir_flag) {
        if (const char* env = std::getenv(output_dir_env); env && *env)
            merged["output.dir"] = ConfigEntry{"output.dir", env, fmt::format("environment {}", output_dir_env)};
    }

    RunConfig cfg;
    if (auto it = merged.find("scenario.kind"); it != merged.end()) {
        try {
            cfg.scenario = default_scenario(parse_scenario_kind(trim(it->second.value)));
        } catch (const ConfigError& err) {
            throw ConfigError(fmt::format("{}: {}", it->second.origin, err.what()));
        }
    }
    for (const auto& [key, e] : merged) {
        if (key == "scenario.kind") continue;
        if (key == "scenario.x_min") cfg.scenario.x_min = to_real(e);
        else if (key == "scenario.x_max") cfg.scenario.x_max = to_real(e);
        else if (key == "scenario.v_min") cfg.scenario.v_min = to_real(e);
        else if (key == "scenario.v_max") cfg.scenario.v_max = to_real(e);
        else if (key == "scenario.alpha") cfg.scenario.alpha = to_real(e);
        else if (key == "scenario.beta") cfg.scenario.beta = to_real(e);
        else if (key == "scenario.epsilon") cfg.scenario.epsilon = to_real(e);
        else if (key == "scenario.gamma") cfg.scenario.gamma = to_real(e);
        else if (key == "scenario.kappa") cfg.scenario.kappa = to_real(e);
        else if (key == "scenario.file") cfg.scenario.initial_file = std::string(trim(e.value));
        else if (key == "grid.N") cfg.N = to_count(e);
        else if (key == "grid.M") cfg.M = to_count(e);
        else if (key == "time.dt") cfg.dt = to_real(e);
        else if (key == "time.T") cfg.T = to_real(e);
        else if (key == "time.scheme") {
            try {
                cfg.scheme = parse_scheme(trim(e.value));
            } catch (const ConfigError& err) {
                throw ConfigError(fmt::format("{}: {}", e.origin, err.what()));
            }
        } else if (key == "time.taylor_order") {
            const long long s = to_integer(e);
            if (s < 0 || s > 64) bad_value(e, "an order between 0 and 64");
            cfg.taylor_order = s == 0 ? std::nullopt : std::optional<int>(static_cast<int>(s));
        } else if (key == "time.strict_cfl") cfg.strict_cfl = to_bool(e);
        else if (key == "field.project_mean") cfg.neutrality_fix = to_bool(e);
        else if (key == "output.dir") {
            if (trim(e.value).empty()) bad_value(e, "a path");
            cfg.output_dir = std::string(trim(e.value));
        } else if (key == "output.snapshot_times") cfg.snapshot_times = to_real_list(e);
    }
    validate(cfg);
    return cfg;
}

RunConfig parse_config(const std::filesystem::path& path, const std::vector<std::string>& override_args) {
    return build_config(read_config_entries(path), parse_overrides(override_args));
}

void validate(const RunConfig& cfg) {
    validate(cfg.scenario);
    for (auto [name, count] : {std::pair{"grid.N", cfg.N}, std::pair{"grid.M", cfg.M}}) {
        if (count < 4 || count % 2 != 0)
            throw ConfigError(fmt::format("{} = {} must be an even node count of at least 4", name, count));
        if (!std::has_single_bit(count)) spdlog::warn("{} = {} is not a power of two; FFT paths are disabled", name, count);
    }
    (void)step_count(cfg.T, cfg.dt);
    for (double ts : cfg.snapshot_times) {
        if (ts < 0.0 || ts > cfg.T * (1.0 + 1e-12))
            throw ConfigError(fmt::format("snapshot time {} lies outside [0, T = {}]", ts, cfg.T));
        if (!is_integer_multiple(ts, cfg.dt))
            throw ConfigError(fmt::format("snapshot time {} is not a multiple of dt = {}", ts, cfg.dt));
    }
}

std::vector<std::pair<std::string, std::string>> resolved_entries(const RunConfig& cfg) {
    const auto& s = cfg.scenario;
    std::vector<std::pair<std::string, std::string>> out{
        {"scenario.kind", std::string(to_string(s.kind))},
        {"scenario.x_min", real(s.x_min)},
        {"scenario.x_max", real(s.x_max)},
        {"scenario.v_min", real(s.v_min)},
        {"scenario.v_max", real(s.v_max)},
    };
    switch (s.kind) {
    case ScenarioKind::TwoStream:
        out.push_back({"scenario.alpha", real(s.alpha)});
        out.push_back({"scenario.beta", real(s.beta)});
        out.push_back({"scenario.epsilon", real(s.epsilon)});
        out.push_back({"scenario.kappa", real(s.kappa)});
        break;
    case ScenarioKind::Landau:
        out.push_back({"scenario.gamma", real(s.gamma)});
        out.push_back({"scenario.kappa", real(s.kappa)});
        break;
    case ScenarioKind::File: out.push_back({"scenario.file", s.initial_file}); break;
    case ScenarioKind::Manufactured: break;
    }
    std::string snaps;
    for (double t : cfg.snapshot_times) snaps += (snaps.empty() ? "" : ",") + real(t);
    out.insert(out.end(), {
                              {"grid.N", std::to_string(cfg.N)},
                              {"grid.M", std::to_string(cfg.M)},
                              {"time.scheme", std::string(to_string(cfg.scheme))},
                              {"time.dt", real(cfg.dt)},
                              {"time.T", real(cfg.T)},
                              {"time.taylor_order", std::to_string(cfg.taylor_order.value_or(0))},
                              {"time.strict_cfl", cfg.strict_cfl ? "true" : "false"},
                              {"field.project_mean", cfg.neutrality_fix ? "true" : "false"},
                              {"output.dir", cfg.output_dir.string()},
                              {"output.snapshot_times", snaps},
                          });
    return out;
}

} // namespace vpspec
