#pragma once

#include "vpspec/field.hpp"
#include "vpspec/phase_space.hpp"

#include <span>

namespace vpspec {

struct DiagnosticsRecord {
    double t = 0.0;
    double Q = 0.0;              ///< discrete particle number
    double P = 0.0;              ///< discrete momentum
    double energy = 0.0;         ///< kinetic + field energy
    double first_mode_a1 = 0.0;  ///< |a_1|, cosine coefficient of the lowest E mode
    double first_mode_abs = 0.0; ///< sqrt(a_1² + b_1²)
    bool cfl_ok = true;
};

double total_particles(const DistributionField& field);
double total_momentum(const DistributionField& field);
double total_energy(const DistributionField& field, const ElectricFieldState& efield);

double first_mode_amplitude(const ElectricFieldState& efield);
double first_mode_magnitude(const ElectricFieldState& efield);

/// ‖a − b‖ / ‖b‖ in the discrete L²(Ω) norm.
double l2_relative_error(const DistributionField& a, const DistributionField& b);
/// ‖a − b‖ / ‖b‖ in the discrete L²(Ω_x) norm.
double l2_relative_error_field(std::span<const double> a, std::span<const double> b, const NodeGrid1D& xgrid);

DiagnosticsRecord make_record(double t, const DistributionField& field, const ElectricFieldState& efield,
                              bool cfl_ok);

} // namespace vpspec
