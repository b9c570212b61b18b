#pragma once

#include "vpspec/diagnostics.hpp"
#include "vpspec/field.hpp"
#include "vpspec/phase_space.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <string_view>

namespace vpspec {

enum class SchemeKind { Euler1, BDF2, BDF3, OneStep2 };

std::string_view to_string(SchemeKind kind) noexcept;
/// Accepts euler1, bdf2, bdf3, onestep2 (case-insensitive). Throws ConfigError.
SchemeKind parse_scheme(std::string_view name);
/// Number of previous time levels a scheme needs before it can step.
int required_history(SchemeKind kind) noexcept;

/// Right-hand side g of the forced Vlasov equation and its x-primitive G.
/// An empty g means the homogeneous equation.
struct SourceTerm {
    PhaseFunction g;
    PhaseFunction G;

    bool present() const noexcept { return static_cast<bool>(g); }
};

struct TimeLevel {
    double t = 0.0;
    DistributionField field;
    ElectricFieldState efield;
};

struct TimeState {
    double t = 0.0;
    std::int64_t k = 0;
    double dt = 0.0;
    DistributionField current;
    ElectricFieldState efield;
    std::deque<TimeLevel> history; ///< front() is t^{k-1}, then t^{k-2}
    bool cfl_ok = true;
    std::int64_t cfl_violations = 0;
};

struct StepOptions {
    /// Taylor truncation order; 0 selects the scheme default (1, or 2 for OneStep2).
    int taylor_order = 0;
    /// Abort instead of warning when Δt exceeds the CFL bound.
    bool strict_cfl = false;
    FieldSolveOptions field{};
};

using Observer = std::function<void(const TimeState&, const DiagnosticsRecord&)>;

/// Builds the t = 0 state: solves the field for `initial` and checks finiteness.
TimeState make_initial_state(DistributionField initial, double dt, const StepOptions& opts = {});

/// 2π (N max|v|·2π/L_x + M max|E|·2π/L_v)^{-1}; +∞ when there is no transport.
double cfl_max_dt(const TimeState& state);

TimeState step_euler(const TimeState& state, const SourceTerm& src, const StepOptions& opts = {});
TimeState step_bdf2(const TimeState& state, const SourceTerm& src, const StepOptions& opts = {});
TimeState step_bdf3(const TimeState& state, const SourceTerm& src, const StepOptions& opts = {});
TimeState step_onestep2(const TimeState& state, const SourceTerm& src, const StepOptions& opts = {});

/// One step of `scheme`, falling back to step_onestep2 while the history is
/// too shallow for a BDF step.
TimeState step(const TimeState& state, SchemeKind scheme, const SourceTerm& src, const StepOptions& opts = {});

/// Fills the history a BDF scheme needs with one-step second-order steps.
TimeState bootstrap_history(TimeState state, SchemeKind scheme, const SourceTerm& src, const StepOptions& opts = {});

/// Number of steps K with K·dt = T. Throws ConfigError when T/dt is not an integer.
std::int64_t step_count(double T, double dt);

/// Steps until t = T, invoking the observer after every step.
TimeState advance(TimeState state, SchemeKind scheme, const SourceTerm& src, double T, const Observer& observer,
                  const StepOptions& opts = {});

} // namespace vpspec
