#include "vpspec/scenarios.hpp"

#include "vpspec/errors.hpp"
#include "vpspec/snapshot.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace vpspec {

namespace {

using std::numbers::pi;

constexpr double domain_tol = 1e-12;

// f = A (1 − cos φ) w with φ = 2x − 2πt, w = e^{−4v²}; E = ½ sin φ.
const double manufactured_amp = 2.0 / std::sqrt(pi);

double manufactured_f(double t, double x, double v) {
    const double phi = 2.0 * x - 2.0 * pi * t;
    return manufactured_amp * (1.0 - std::cos(phi)) * std::exp(-4.0 * v * v);
}

double manufactured_e(double t, double x) { return 0.5 * std::sin(2.0 * x - 2.0 * pi * t); }

double manufactured_g(double t, double x, double v) {
    const double phi = 2.0 * x - 2.0 * pi * t;
    const double w = manufactured_amp * std::exp(-4.0 * v * v);
    return w * ((6.0 * v - 2.0 * pi) * std::sin(phi) - 2.0 * v * std::sin(2.0 * phi));
}

double manufactured_G(double t, double x, double v) {
    const double phi = 2.0 * x - 2.0 * pi * t;
    const double w = manufactured_amp * std::exp(-4.0 * v * v);
    return w * ((pi - 3.0 * v) * std::cos(phi) + 0.5 * v * std::cos(2.0 * phi));
}

bool close(double a, double b) { return std::abs(a - b) <= domain_tol * std::max(1.0, std::abs(b)); }

void log_boundary_magnitude(const DistributionField& field) {
    // The v = v_min row doubles as the periodic image of v_max.
    double edge = 0.0;
    for (std::size_t n = 0; n < field.values.rows(); ++n) edge = std::max(edge, std::abs(field.values(n, 0)));
    spdlog::info("initial |f| on the velocity boundary: {:.3e}", edge);
}

} // namespace

std::string_view to_string(ScenarioKind kind) noexcept {
    switch (kind) {
    case ScenarioKind::Manufactured: return "manufactured";
    case ScenarioKind::TwoStream: return "two_stream";
    case ScenarioKind::Landau: return "landau";
    case ScenarioKind::File: return "file";
    }
    return "unknown";
}

ScenarioKind parse_scenario_kind(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (auto kind : {ScenarioKind::Manufactured, ScenarioKind::TwoStream, ScenarioKind::Landau, ScenarioKind::File})
        if (lower == to_string(kind)) return kind;
    throw ConfigError(fmt::format("unknown scenario '{}' (expected manufactured, two_stream, landau or file)", name));
}

ScenarioConfig default_scenario(ScenarioKind kind) {
    ScenarioConfig cfg;
    cfg.kind = kind;
    switch (kind) {
    case ScenarioKind::Manufactured:
    case ScenarioKind::File:
        cfg.x_min = 0.0;
        cfg.x_max = 2.0 * pi;
        cfg.v_min = -pi;
        cfg.v_max = pi;
        break;
    case ScenarioKind::TwoStream:
        cfg.x_min = 0.0;
        cfg.x_max = 4.0 * pi;
        cfg.v_min = -5.0;
        cfg.v_max = 5.0;
        cfg.alpha = 1.0 / std::sqrt(8.0);
        cfg.beta = 1.0;
        cfg.epsilon = 1e-3;
        cfg.kappa = 0.5;
        break;
    case ScenarioKind::Landau:
        cfg.x_min = 0.0;
        cfg.x_max = 4.0 * pi;
        cfg.v_min = -10.0;
        cfg.v_max = 10.0;
        cfg.gamma = 0.01;
        cfg.kappa = 0.5;
        break;
    }
    return cfg;
}

void validate(const ScenarioConfig& cfg) {
    if (!(cfg.x_max > cfg.x_min) || !(cfg.v_max > cfg.v_min) || !std::isfinite(cfg.x_max - cfg.x_min) ||
        !std::isfinite(cfg.v_max - cfg.v_min))
        throw ConfigError("scenario domain must satisfy x_min < x_max and v_min < v_max");
    switch (cfg.kind) {
    case ScenarioKind::Manufactured:
        if (!close(cfg.x_min, 0.0) || !close(cfg.x_max, 2.0 * pi) || !close(cfg.v_min, -pi) || !close(cfg.v_max, pi))
            throw ConfigError("manufactured scenario is defined on [0, 2pi] x [-pi, pi] only");
        return;
    case ScenarioKind::File:
        if (cfg.initial_file.empty()) throw ConfigError("file scenario needs scenario.file");
        return;
    case ScenarioKind::TwoStream:
        if (!(cfg.alpha > 0.0)) throw ConfigError("two-stream alpha must be positive");
        if (!(cfg.epsilon >= 0.0)) throw ConfigError("two-stream epsilon must be non-negative");
        if (!std::isfinite(cfg.beta)) throw ConfigError("two-stream beta must be finite");
        break;
    case ScenarioKind::Landau:
        if (!(cfg.gamma >= 0.0)) throw ConfigError("Landau gamma must be non-negative");
        break;
    }
    const double modes = cfg.kappa * (cfg.x_max - cfg.x_min) / (2.0 * pi);
    if (!(modes >= 0.5) || std::abs(modes - std::round(modes)) > 1e-9 * std::max(1.0, modes))
        throw ConfigError(fmt::format("kappa * L_x / (2 pi) = {:.12g} is not a positive integer", modes));
}

double initial_value(const ScenarioConfig& cfg, double x, double v) {
    switch (cfg.kind) {
    case ScenarioKind::Manufactured: return manufactured_f(0.0, x, v);
    case ScenarioKind::TwoStream: {
        const double width = cfg.alpha * std::sqrt(2.0);
        const double a = (v - cfg.beta) / width;
        const double b = (v + cfg.beta) / width;
        const double norm = 1.0 / (2.0 * cfg.alpha * std::sqrt(2.0 * pi));
        return norm * (std::exp(-a * a) + std::exp(-b * b)) *
               (1.0 + cfg.epsilon * std::cos(cfg.kappa * (x - cfg.x_min)));
    }
    case ScenarioKind::Landau:
        return (1.0 + cfg.gamma * std::cos(cfg.kappa * (x - cfg.x_min))) * std::exp(-0.5 * v * v) /
               std::sqrt(2.0 * pi);
    case ScenarioKind::File: break;
    }
    throw std::invalid_argument("initial_value: file scenarios have no closed form");
}

DistributionField init_field(const ScenarioConfig& cfg, const PhaseGridPtr& grid) {
    validate(cfg);
    const PhaseGrid& g = *grid;
    if (!close(g.xgrid.origin, cfg.x_min) || !close(g.xgrid.origin + g.xgrid.length, cfg.x_max) ||
        !close(g.vgrid.origin, cfg.v_min) || !close(g.vgrid.origin + g.vgrid.length, cfg.v_max))
        throw ConfigError("phase grid does not match the scenario domain");

    DistributionField field;
    if (cfg.kind == ScenarioKind::File) {
        Snapshot snap = read_snapshot(cfg.initial_file);
        if (snap.nx != g.nx() || snap.nv != g.nv() || !close(snap.x_min, cfg.x_min) || !close(snap.x_max, cfg.x_max) ||
            !close(snap.v_min, cfg.v_min) || !close(snap.v_max, cfg.v_max))
            throw ConfigError(fmt::format("initial data in {} does not match the configured grid", cfg.initial_file));
        field = DistributionField(grid, std::move(snap.values));
    } else {
        field = DistributionField::sample(grid, [&](double x, double v) { return initial_value(cfg, x, v); });
    }
    log_boundary_magnitude(field);
    return field;
}

std::pair<DistributionField, std::vector<double>> manufactured_exact(double t, const PhaseGridPtr& grid) {
    const PhaseGrid& g = *grid;
    if (!close(g.xgrid.origin, 0.0) || !close(g.xgrid.length, 2.0 * pi) || !close(g.vgrid.origin, -pi) ||
        !close(g.vgrid.length, 2.0 * pi))
        throw std::invalid_argument("manufactured_exact: grid must be [0, 2pi) x [-pi, pi)");
    auto field = DistributionField::sample(grid, [t](double x, double v) { return manufactured_f(t, x, v); });
    std::vector<double> e(g.nx());
    for (std::size_t n = 0; n < g.nx(); ++n) e[n] = manufactured_e(t, g.xgrid.nodes[n]);
    return {std::move(field), std::move(e)};
}

SourceTerm manufactured_source() { return SourceTerm{manufactured_g, manufactured_G}; }

SourceTerm scenario_source(const ScenarioConfig& cfg) {
    return cfg.kind == ScenarioKind::Manufactured ? manufactured_source() : SourceTerm{};
}

} // namespace vpspec
