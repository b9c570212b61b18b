// Command-line front end: run, converge and inspect.

#include "vpspec/config.hpp"
#include "vpspec/driver.hpp"
#include "vpspec/errors.hpp"
#include "vpspec/snapshot.hpp"
#include "vpspec/version.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

namespace {

enum ExitCode : int { ok = 0, config_error = 1, numerical_error = 2, io_error = 3 };

std::vector<double> parse_dts(const std::string& list) {
    std::vector<double> dts;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const auto comma = list.find(',', pos);
        const std::string item = list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
            throw vpspec::ConfigError(fmt::format("--dts: '{}' is not a number", item));
        dts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return dts;
}

std::vector<vpspec::SchemeKind> parse_schemes(const std::string& list) {
    std::vector<vpspec::SchemeKind> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = list.find(',', pos);
        out.push_back(vpspec::parse_scheme(list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int cmd_run(const std::string& config, const std::vector<std::string>& overrides) {
    const auto cfg = vpspec::parse_config(config, overrides);
    const auto summary = vpspec::run_simulation(cfg);
    const double q0 = summary.initial.Q;
    fmt::print("{} steps written to {}\n", summary.steps, (cfg.output_dir / "diagnostics.csv").string());
    fmt::print("relative mass change {:.3e}, momentum change {:.3e}, energy change {:.3e}\n",
               (summary.final.Q - q0) / q0, summary.final.P - summary.initial.P,
               (summary.final.energy - summary.initial.energy) / summary.initial.energy);
    if (summary.cfl_violations > 0) fmt::print("{} steps exceeded the CFL bound\n", summary.cfl_violations);
    return ok;
}

int cmd_converge(const std::string& config, const std::string& dts, const std::string& schemes,
                 const std::vector<std::string>& overrides) {
    const auto cfg = vpspec::parse_config(config, overrides);
    const auto path = vpspec::run_convergence_study(cfg, parse_dts(dts), parse_schemes(schemes));
    fmt::print("convergence table written to {}\n", path.string());
    return ok;
}

int cmd_inspect(const std::string& file) {
    const auto snap = vpspec::read_snapshot(file);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double sum = 0.0;
    bool finite = true;
    for (double v : snap.values.flat()) {
        finite = finite && std::isfinite(v);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        sum += v;
    }
    const double area = (snap.x_max - snap.x_min) * (snap.v_max - snap.v_min) /
                        static_cast<double>(snap.nx * snap.nv);
    fmt::print("grid      {} x {} on [{}, {}] x [{}, {}]\n", snap.nx, snap.nv, snap.x_min, snap.x_max, snap.v_min,
               snap.v_max);
    fmt::print("time      {:.17g}\n", snap.t);
    fmt::print("range     [{:.6e}, {:.6e}]\n", lo, hi);
    fmt::print("mass      {:.17g}\n", area * sum);
    fmt::print("finite    {}\n", finite ? "yes" : "no");
    return finite ? ok : numerical_error;
}

} // namespace

int main(int argc, char** argv) {
    spdlog::set_default_logger(spdlog::stderr_color_mt("vpspec"));

    CLI::App app{"Spectral semi-Lagrangian Vlasov-Poisson solver"};
    app.set_version_flag("--version", std::string(vpspec::version_string));
    app.require_subcommand(1);
    bool quiet = false;
    app.add_flag("-q,--quiet", quiet, "Only log warnings and errors");

    std::string config;
    std::vector<std::string> overrides;

    auto* run = app.add_subcommand("run", "Run one simulation from a key = value config file");
    run->add_option("config", config, "Configuration file")->required();
    run->allow_extras();
    run->footer("Any config key can be overridden as --key=value, e.g. --time.dt=0.005 or --dt=0.005.\n"
                "VPSPEC_OUTPUT_DIR replaces output.dir unless --output_dir is given.");

    std::string dts;
    std::string schemes = "euler1,bdf2,bdf3,onestep2";
    auto* converge = app.add_subcommand("converge", "Time-step convergence study on the manufactured problem");
    converge->add_option("config", config, "Configuration file")->required();
    converge->add_option("--dts", dts, "Comma-separated, strictly decreasing time steps")->required();
    converge->add_option("--schemes", schemes, "Comma-separated schemes")->capture_default_str();
    converge->allow_extras();

    std::string snapshot;
    auto* inspect = app.add_subcommand("inspect", "Summarize a snapshot file");
    inspect->add_option("snapshot", snapshot, "Snapshot file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return config_error;
    }
    spdlog::set_level(quiet ? spdlog::level::warn : spdlog::level::info);

    try {
        if (run->parsed()) return cmd_run(config, run->remaining());
        if (converge->parsed()) return cmd_converge(config, dts, schemes, converge->remaining());
        return cmd_inspect(snapshot);
    } catch (const vpspec::ConfigError& e) {
        spdlog::error("configuration error: {}", e.what());
        return config_error;
    } catch (const vpspec::NumericalError& e) {
        if (e.step() >= 0) spdlog::error("numerical failure at step {}: {}", e.step(), e.what());
        else spdlog::error("numerical failure: {}", e.what());
        return numerical_error;
    } catch (const vpspec::IoError& e) {
        spdlog::error("I/O error: {}", e.what());
        return io_error;
    } catch (const std::invalid_argument& e) {
        spdlog::error("invalid input: {}", e.what());
        return config_error;
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return numerical_error;
    }
}
