#pragma once

#include "vpspec/phase_space.hpp"
#include "vpspec/spectral.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace vpspec {

/// ρ(x_n) = ∫ f(x_n, v) dv by the velocity quadrature.
struct ChargeDensity {
    std::vector<double> values;
};

struct ElectricFieldState {
    std::vector<double> nodal;
    FourierModes modes;
    std::optional<std::vector<double>> ddx; ///< ∂E/∂x = 1 − ρ at the nodes
    std::optional<std::vector<double>> ddt; ///< ∂E/∂t at the nodes
};

/// Real-valued function of (t, x, v); used for sources and their x-primitives.
using PhaseFunction = std::function<double(double, double, double)>;

/// Default tolerance on |mean(ρ) − 1| accepted by solve_field.
inline constexpr double neutrality_tolerance = 1e-8;

struct FieldSolveOptions {
    double neutrality_tol = neutrality_tolerance;
    /// Project out the mean of ρ − 1 instead of rejecting a non-neutral state.
    bool project_mean = false;
};

ChargeDensity charge_density(const DistributionField& field);

/// Solves ∂E/∂x = 1 − ρ on the periodic x grid with zero-mean E. The Nyquist
/// mode is dropped. Throws NumericalError when ρ is not neutral.
ElectricFieldState solve_field(const ChargeDensity& rho, const NodeGrid1D& xgrid, FieldSolveOptions opts = {});

/// ∂E/∂t(x_n) = ∫ [v f(x_n, v) − G(t, x_n, v)] dv with G ≡ 0 when absent.
std::vector<double> field_time_derivative(const DistributionField& field, const PhaseFunction& source_primitive,
                                          double t);

} // namespace vpspec
