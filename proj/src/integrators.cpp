#include "vpspec/integrators.hpp"

#include "vpspec/errors.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace vpspec {

namespace {

constexpr std::size_t max_history = 2;

double max_abs(std::span<const double> values) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

void check_cfl(TimeState& next, const TimeState& state, const StepOptions& opts) {
    const double bound = cfl_max_dt(state);
    next.cfl_ok = state.dt <= bound;
    if (next.cfl_ok) return;
    if (opts.strict_cfl)
        throw NumericalError(fmt::format("step {}: dt = {} exceeds the CFL bound {:.6g}", state.k + 1, state.dt, bound),
                             state.k + 1);
    if (next.cfl_violations++ == 0)
        spdlog::warn("step {}: dt = {} exceeds the CFL bound {:.6g}; continuing", state.k + 1, state.dt, bound);
}

// Value of the step-k interpolant at the foot of the characteristic traced back
// by tau from each node, with the first-order characteristic and the given E.
Matrix backward_shift(const DistributionField& field, std::span<const double> e_nodes, double tau, int order) {
    const PhaseGrid& g = *field.grid;
    if (order == 1) {
        Matrix phi = phi_transport(field, e_nodes);
        Matrix out = field.values;
        auto dst = out.flat();
        const auto src = phi.flat();
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += tau * src[k];
        return out;
    }
    DisplacementField disp{Matrix(g.nx(), g.nv()), Matrix(g.nx(), g.nv())};
    for (std::size_t n = 0; n < g.nx(); ++n) {
        for (std::size_t m = 0; m < g.nv(); ++m) {
            disp.dxs(n, m) = g.vgrid.nodes[m] * tau;
            disp.dvs(n, m) = -e_nodes[n] * tau;
        }
    }
    return taylor_shifted_eval(field, disp, order);
}

void add_nodal_source(Matrix& values, const PhaseGrid& g, const SourceTerm& src, double t, double weight) {
    if (!src.present()) return;
    for (std::size_t n = 0; n < g.nx(); ++n) {
        const double x = g.xgrid.nodes[n];
        for (std::size_t m = 0; m < g.nv(); ++m) values(n, m) += weight * src.g(t, x, g.vgrid.nodes[m]);
    }
}

// Rotates the history, installs the new values, re-solves the field.
TimeState finish_step(const TimeState& state, Matrix next_values, const StepOptions& opts) {
    TimeState next;
    next.dt = state.dt;
    next.k = state.k + 1;
    next.t = static_cast<double>(next.k) * state.dt;
    next.cfl_violations = state.cfl_violations;
    check_cfl(next, state, opts);

    next.current = DistributionField(state.current.grid, std::move(next_values));
    if (!next.current.all_finite())
        throw NumericalError(fmt::format("non-finite distribution value at step {}", next.k), next.k);
    next.efield = solve_field(charge_density(next.current), next.current.grid->xgrid, opts.field);

    next.history = state.history;
    next.history.push_front(TimeLevel{state.t, state.current, state.efield});
    while (next.history.size() > max_history) next.history.pop_back();
    return next;
}

int truncation(const StepOptions& opts, int scheme_default) {
    if (opts.taylor_order < 0) throw std::invalid_argument("taylor_order must be non-negative");
    return opts.taylor_order == 0 ? scheme_default : opts.taylor_order;
}

void require_history(const TimeState& state, std::size_t depth, const char* scheme) {
    if (state.history.size() < depth)
        throw std::logic_error(fmt::format("{} step needs {} previous time levels, state has {}", scheme, depth,
                                           state.history.size()));
}

} // namespace

std::string_view to_string(SchemeKind kind) noexcept {
    switch (kind) {
    case SchemeKind::Euler1: return "euler1";
    case SchemeKind::BDF2: return "bdf2";
    case SchemeKind::BDF3: return "bdf3";
    case SchemeKind::OneStep2: return "onestep2";
    }
    return "unknown";
}

SchemeKind parse_scheme(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (auto kind : {SchemeKind::Euler1, SchemeKind::BDF2, SchemeKind::BDF3, SchemeKind::OneStep2})
        if (lower == to_string(kind)) return kind;
    throw ConfigError(fmt::format("unknown scheme '{}' (expected euler1, bdf2, bdf3 or onestep2)", name));
}

int required_history(SchemeKind kind) noexcept {
    switch (kind) {
    case SchemeKind::BDF2: return 1;
    case SchemeKind::BDF3: return 2;
    default: return 0;
    }
}

TimeState make_initial_state(DistributionField initial, double dt, const StepOptions& opts) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("time step must be positive and finite");
    if (!initial.all_finite()) throw NumericalError("non-finite value in the initial distribution", 0);
    TimeState state;
    state.dt = dt;
    state.efield = solve_field(charge_density(initial), initial.grid->xgrid, opts.field);
    state.current = std::move(initial);
    state.cfl_ok = dt <= cfl_max_dt(state);
    return state;
}

double cfl_max_dt(const TimeState& state) {
    const PhaseGrid& g = *state.current.grid;
    const double vmax = max_abs(g.vgrid.nodes);
    const double emax = max_abs(state.efield.nodal);
    const double rate = static_cast<double>(g.nx()) * vmax * g.xgrid.scale() +
                        static_cast<double>(g.nv()) * emax * g.vgrid.scale();
    if (rate == 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::numbers::pi / rate;
}

TimeState step_euler(const TimeState& state, const SourceTerm& src, const StepOptions& opts) {
    const int order = truncation(opts, 1);
    Matrix next = backward_shift(state.current, state.efield.nodal, state.dt, order);
    add_nodal_source(next, *state.current.grid, src, state.t, state.dt);
    return finish_step(state, std::move(next), opts);
}

TimeState step_bdf2(const TimeState& state, const SourceTerm& src, const StepOptions& opts) {
    require_history(state, 1, "BDF2");
    const int order = truncation(opts, 1);
    const double dt = state.dt;
    const TimeLevel& prev = state.history[0];

    Matrix next = backward_shift(state.current, state.efield.nodal, dt, order);
    const Matrix older = backward_shift(prev.field, prev.efield.nodal, 2.0 * dt, order);
    auto dst = next.flat();
    const auto old = older.flat();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = (4.0 / 3.0) * dst[k] - (1.0 / 3.0) * old[k];
    add_nodal_source(next, *state.current.grid, src, state.t + dt, (2.0 / 3.0) * dt);
    return finish_step(state, std::move(next), opts);
}

TimeState step_bdf3(const TimeState& state, const SourceTerm& src, const StepOptions& opts) {
    require_history(state, 2, "BDF3");
    const int order = truncation(opts, 1);
    const double dt = state.dt;
    const TimeLevel& prev = state.history[0];
    const TimeLevel& prev2 = state.history[1];

    Matrix next = backward_shift(state.current, state.efield.nodal, dt, order);
    const Matrix older = backward_shift(prev.field, prev.efield.nodal, 2.0 * dt, order);
    const Matrix oldest = backward_shift(prev2.field, prev2.efield.nodal, 3.0 * dt, order);
    auto dst = next.flat();
    const auto o1 = older.flat();
    const auto o2 = oldest.flat();
    for (std::size_t k = 0; k < dst.size(); ++k)
        dst[k] = (18.0 / 11.0) * dst[k] - (9.0 / 11.0) * o1[k] + (2.0 / 11.0) * o2[k];
    add_nodal_source(next, *state.current.grid, src, state.t + dt, (6.0 / 11.0) * dt);
    return finish_step(state, std::move(next), opts);
}

TimeState step_onestep2(const TimeState& state, const SourceTerm& src, const StepOptions& opts) {
    if (src.present() && !src.G)
        throw std::invalid_argument("one-step second-order scheme needs the x-primitive G of the source");
    const int order = std::max(truncation(opts, 2), 2);
    const PhaseGrid& g = *state.current.grid;
    const double dt = state.dt;
    const auto& e = state.efield.nodal;

    const std::vector<double> dedt = field_time_derivative(state.current, src.G, state.t);
    std::vector<double> dedx;
    if (state.efield.ddx) {
        dedx = *state.efield.ddx;
    } else {
        const auto rho = charge_density(state.current);
        dedx.resize(rho.values.size());
        for (std::size_t n = 0; n < dedx.size(); ++n) dedx[n] = 1.0 - rho.values[n];
    }

    DisplacementField disp{Matrix(g.nx(), g.nv()), Matrix(g.nx(), g.nv())};
    for (std::size_t n = 0; n < g.nx(); ++n) {
        for (std::size_t m = 0; m < g.nv(); ++m) {
            const double v = g.vgrid.nodes[m];
            disp.dxs(n, m) = v * dt + 0.5 * e[n] * dt * dt;
            disp.dvs(n, m) = -e[n] * dt - 0.5 * (dedt[n] - v * dedx[n]) * dt * dt;
        }
    }
    Matrix next = taylor_shifted_eval(state.current, disp, order);

    if (src.present()) {
        const double t_next = state.t + dt;
        for (std::size_t n = 0; n < g.nx(); ++n) {
            const double x = g.xgrid.nodes[n];
            for (std::size_t m = 0; m < g.nv(); ++m) {
                const double v = g.vgrid.nodes[m];
                const double foot = src.g(state.t, x - disp.dxs(n, m), v - disp.dvs(n, m));
                next(n, m) += 0.5 * dt * (foot + src.g(t_next, x, v));
            }
        }
    }
    TimeState out = finish_step(state, std::move(next), opts);
    out.history.front().efield.ddt = dedt;
    return out;
}

TimeState step(const TimeState& state, SchemeKind scheme, const SourceTerm& src, const StepOptions& opts) {
    if (state.history.size() < static_cast<std::size_t>(required_history(scheme)))
        return step_onestep2(state, src, opts);
    switch (scheme) {
    case SchemeKind::Euler1: return step_euler(state, src, opts);
    case SchemeKind::BDF2: return step_bdf2(state, src, opts);
    case SchemeKind::BDF3: return step_bdf3(state, src, opts);
    case SchemeKind::OneStep2: return step_onestep2(state, src, opts);
    }
    throw std::logic_error("unhandled scheme");
}

TimeState bootstrap_history(TimeState state, SchemeKind scheme, const SourceTerm& src, const StepOptions& opts) {
    while (state.history.size() < static_cast<std::size_t>(required_history(scheme)))
        state = step_onestep2(state, src, opts);
    return state;
}

std::int64_t step_count(double T, double dt) {
    if (!(T > 0.0) || !std::isfinite(T)) throw ConfigError("final time must be positive and finite");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("time step must be positive and finite");
    const double ratio = T / dt;
    const double k = std::round(ratio);
    if (k < 1.0 || std::abs(ratio - k) > 1e-9 * k)
        throw ConfigError(fmt::format("T = {} is not an integer multiple of dt = {} (T/dt = {:.12g})", T, dt, ratio));
    return static_cast<std::int64_t>(k);
}

TimeState advance(TimeState state, SchemeKind scheme, const SourceTerm& src, double T, const Observer& observer,
                  const StepOptions& opts) {
    const std::int64_t total = step_count(T, state.dt);
    while (state.k < total) {
        state = step(state, scheme, src, opts);
        if (observer) observer(state, make_record(state.t, state.current, state.efield, state.cfl_ok));
    }
    return state;
}

} // namespace vpspec
