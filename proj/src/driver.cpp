#include "vpspec/driver.hpp"

#include "vpspec/errors.hpp"
#include "vpspec/scenarios.hpp"
#include "vpspec/snapshot.hpp"
#include "vpspec/version.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <spdlog/spdlog.h>

#include <cmath>
#include <exception>
#include <fstream>
#include <set>

namespace vpspec {

namespace {

namespace fs = std::filesystem;

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw IoError(fmt::format("cannot create output directory {}: {}", dir.string(), ec.message()));
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream os(path);
    if (!os) throw IoError(fmt::format("cannot open {} for writing", path.string()));
    return os;
}

void check_stream(const std::ostream& os, const fs::path& path) {
    if (!os) throw IoError(fmt::format("failed writing {}", path.string()));
}

PhaseGridPtr grid_for(const RunConfig& cfg) {
    const auto& s = cfg.scenario;
    return make_phase_grid(cfg.N, s.x_min, s.x_max, cfg.M, s.v_min, s.v_max);
}

std::set<std::int64_t> snapshot_steps(const RunConfig& cfg) {
    std::set<std::int64_t> steps;
    for (double t : cfg.snapshot_times) steps.insert(static_cast<std::int64_t>(std::llround(t / cfg.dt)));
    return steps;
}

std::optional<double> rate(double prev, double curr) {
    if (!(prev > 0.0) || !(curr > 0.0)) return std::nullopt;
    return std::log2(prev / curr);
}

} // namespace

void write_diagnostics_row(std::ostream& os, const DiagnosticsRecord& rec) {
    fmt::print(os, "{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{}\n", rec.t, rec.Q, rec.P, rec.energy,
               rec.first_mode_a1, rec.first_mode_abs, rec.cfl_ok ? 1 : 0);
}

void write_manifest(std::ostream& os, const RunConfig& cfg) {
    fmt::print(os, "# vpspec {} run manifest\n", version_string);
    fmt::print(os, "library.version = {}\n", version_string);
    for (const auto& [key, value] : resolved_entries(cfg)) fmt::print(os, "{} = {}\n", key, value);
}

RunSummary run_simulation(const RunConfig& cfg) {
    validate(cfg);
    const StepOptions opts = cfg.step_options();
    const auto grid = grid_for(cfg);
    const SourceTerm src = scenario_source(cfg.scenario);
    TimeState state = make_initial_state(init_field(cfg.scenario, grid), cfg.dt, opts);

    ensure_dir(cfg.output_dir);
    {
        const fs::path path = cfg.output_dir / "run_manifest.txt";
        auto os = open_output(path);
        write_manifest(os, cfg);
        check_stream(os, path);
    }

    RunSummary summary;
    summary.initial = make_record(0.0, state.current, state.efield, state.cfl_ok);
    const auto wanted = snapshot_steps(cfg);
    auto snapshot = [&](const TimeState& s) {
        if (!wanted.contains(s.k)) return;
        const fs::path path = cfg.output_dir / fmt::format("snapshot_{:08d}.txt", s.k);
        write_snapshot(path, make_snapshot(s.current, s.t));
        summary.snapshots.push_back(path);
    };
    snapshot(state);

    const fs::path diag_path = cfg.output_dir / "diagnostics.csv";
    auto diag = open_output(diag_path);
    diag << diagnostics_header << '\n';
    spdlog::info("{} run: scheme {}, N = {}, M = {}, dt = {}, T = {}", to_string(cfg.scenario.kind),
                 to_string(cfg.scheme), cfg.N, cfg.M, cfg.dt, cfg.T);
    state = advance(std::move(state), cfg.scheme, src, cfg.T,
                    [&](const TimeState& s, const DiagnosticsRecord& rec) {
                        write_diagnostics_row(diag, rec);
                        snapshot(s);
                        summary.final = rec;
                    },
                    opts);
    diag.flush();
    check_stream(diag, diag_path);

    summary.steps = state.k;
    summary.cfl_violations = state.cfl_violations;
    if (summary.cfl_violations > 0) spdlog::warn("{} steps exceeded the CFL bound", summary.cfl_violations);
    return summary;
}

ConvergenceRow convergence_point(const RunConfig& cfg, SchemeKind scheme, double dt) {
    if (cfg.scenario.kind != ScenarioKind::Manufactured)
        throw ConfigError("the convergence study needs the manufactured scenario");
    // Neither the forcing sampled at the one-step feet nor the Taylor terms
    // keep the discrete mean of rho exactly at 1, so it is projected out.
    StepOptions opts = cfg.step_options();
    opts.field.project_mean = true;
    const auto grid = grid_for(cfg);
    TimeState state = make_initial_state(init_field(cfg.scenario, grid), dt, opts);
    state = advance(std::move(state), scheme, manufactured_source(), cfg.T, nullptr, opts);

    const auto [exact_f, exact_e] = manufactured_exact(state.t, grid);
    ConvergenceRow row;
    row.scheme = scheme;
    row.dt = dt;
    row.steps = state.k;
    row.f_error = l2_relative_error(state.current, exact_f);
    row.e_error = l2_relative_error_field(state.efield.nodal, exact_e, grid->xgrid);
    return row;
}

std::vector<ConvergenceRow> convergence_study(const RunConfig& base, const std::vector<double>& dts,
                                              const std::vector<SchemeKind>& schemes) {
    if (dts.empty()) throw ConfigError("the dt ladder is empty");
    if (schemes.empty()) throw ConfigError("no schemes selected");
    for (std::size_t i = 0; i < dts.size(); ++i) {
        (void)step_count(base.T, dts[i]);
        if (i > 0 && !(dts[i] < dts[i - 1])) throw ConfigError("the dt ladder must be strictly decreasing");
    }

    const std::size_t total = dts.size() * schemes.size();
    std::vector<ConvergenceRow> rows(total);
    std::vector<std::exception_ptr> failures(total);
    const auto count = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            rows[idx] = convergence_point(base, schemes[idx / dts.size()], dts[idx % dts.size()]);
        } catch (...) {
            failures[idx] = std::current_exception();
        }
    }
    for (const auto& failure : failures)
        if (failure) std::rethrow_exception(failure);

    for (std::size_t i = 0; i < total; ++i) {
        if (i % dts.size() == 0) continue;
        rows[i].f_rate = rate(rows[i - 1].f_error, rows[i].f_error);
        rows[i].e_rate = rate(rows[i - 1].e_error, rows[i].e_error);
    }
    return rows;
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
    auto opt = [](const std::optional<double>& v) { return v ? fmt::format("{:.17g}", *v) : std::string(); };
    os << "scheme,dt,steps,f_error,f_rate,e_error,e_rate\n";
    for (const auto& r : rows)
        fmt::print(os, "{},{:.17g},{},{:.17g},{},{:.17g},{}\n", to_string(r.scheme), r.dt, r.steps, r.f_error,
                   opt(r.f_rate), r.e_error, opt(r.e_rate));
}

fs::path run_convergence_study(const RunConfig& base, const std::vector<double>& dts,
                               const std::vector<SchemeKind>& schemes) {
    const auto rows = convergence_study(base, dts, schemes);
    ensure_dir(base.output_dir);
    {
        const fs::path path = base.output_dir / "run_manifest.txt";
        auto os = open_output(path);
        write_manifest(os, base);
        std::string ladder;
        for (double dt : dts) ladder += (ladder.empty() ? "" : ",") + fmt::format("{:.17g}", dt);
        std::string names;
        for (auto s : schemes) names += (names.empty() ? "" : ",") + std::string(to_string(s));
        fmt::print(os, "# convergence.dts = {}\n# convergence.schemes = {}\n", ladder, names);
        check_stream(os, path);
    }
    const fs::path path = base.output_dir / "convergence.csv";
    auto os = open_output(path);
    write_convergence_csv(os, rows);
    os.flush();
    check_stream(os, path);
    return path;
}

} // namespace vpspec
