#pragma once

#include "vpspec/field.hpp"
#include "vpspec/integrators.hpp"
#include "vpspec/phase_space.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vpspec {

enum class ScenarioKind { Manufactured, TwoStream, Landau, File };

std::string_view to_string(ScenarioKind kind) noexcept;
/// Accepts manufactured, two_stream, landau, file. Throws ConfigError.
ScenarioKind parse_scenario_kind(std::string_view name);

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::Manufactured;
    double x_min = 0.0;
    double x_max = 0.0;
    double v_min = 0.0;
    double v_max = 0.0;
    double alpha = 0.0;   ///< two-stream thermal width
    double beta = 0.0;    ///< two-stream beam speed
    double epsilon = 0.0; ///< two-stream perturbation size
    double gamma = 0.0;   ///< Landau perturbation size
    double kappa = 0.0;   ///< perturbation wavenumber
    std::string initial_file; ///< snapshot with nodal initial data (File kind)
};

/// Domain and parameters of the standard setup for `kind`.
ScenarioConfig default_scenario(ScenarioKind kind);

/// Throws ConfigError on α ≤ 0, negative ε or γ, a κ that is not a multiple of
/// 2π/L_x, or an empty domain.
void validate(const ScenarioConfig& cfg);

/// Initial distribution f(0, x, v) of an analytic scenario.
double initial_value(const ScenarioConfig& cfg, double x, double v);

/// Nodal initial data. For the File kind the snapshot's grid must match `grid`.
/// Logs the largest |f| on the velocity boundary row.
DistributionField init_field(const ScenarioConfig& cfg, const PhaseGridPtr& grid);

/// Exact manufactured f(t) and E(t) at the nodes of `grid`, which must be
/// [0, 2π) × [−π, π).
std::pair<DistributionField, std::vector<double>> manufactured_exact(double t, const PhaseGridPtr& grid);

/// Forcing g of the manufactured problem and its x-primitive G.
SourceTerm manufactured_source();

/// Forcing of the scenario (empty unless Manufactured).
SourceTerm scenario_source(const ScenarioConfig& cfg);

} // namespace vpspec
