#include "vpspec/field.hpp"

#include "vpspec/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

namespace vpspec {

ChargeDensity charge_density(const DistributionField& field) {
    if (!field.grid) throw std::invalid_argument("charge_density: field has no grid");
    const double dv = field.grid->vgrid.spacing();
    ChargeDensity rho{std::vector<double>(field.values.rows(), 0.0)};
    for (std::size_t n = 0; n < field.values.rows(); ++n) {
        double sum = 0.0;
        for (double c : field.values.row(n)) sum += c;
        rho.values[n] = dv * sum;
    }
    return rho;
}

ElectricFieldState solve_field(const ChargeDensity& rho, const NodeGrid1D& xgrid, FieldSolveOptions opts) {
    if (rho.values.size() != xgrid.count)
        throw std::invalid_argument(fmt::format("solve_field: expected {} density values, got {}", xgrid.count,
                                                rho.values.size()));

    std::vector<double> perturbation(rho.values.size());
    for (std::size_t n = 0; n < perturbation.size(); ++n) perturbation[n] = rho.values[n] - 1.0;

    FourierModes rho_modes = analyze_modes(xgrid, perturbation);
    if (std::abs(rho_modes.mean) > opts.neutrality_tol && !opts.project_mean)
        throw NumericalError(fmt::format("solve_field: charge density mean deviates from 1 by {:.3e} "
                                         "(tolerance {:.1e}); periodic Poisson problem is not solvable "
                                         "(field.project_mean = true projects the mean out)",
                                         rho_modes.mean, opts.neutrality_tol));

    const std::size_t half = xgrid.count / 2;
    FourierModes e_modes{0.0, std::vector<double>(half, 0.0), std::vector<double>(half, 0.0)};
    for (std::size_t k = 1; k < half; ++k) {
        const double kappa = xgrid.scale() * static_cast<double>(k);
        e_modes.cos_coeffs[k - 1] = rho_modes.sin_coeffs[k - 1] / kappa;
        e_modes.sin_coeffs[k - 1] = -rho_modes.cos_coeffs[k - 1] / kappa;
    }

    ElectricFieldState state;
    state.nodal = synthesize_modes(e_modes, xgrid);
    state.modes = std::move(e_modes);
    std::vector<double> ddx(rho.values.size());
    const double offset = opts.project_mean ? rho_modes.mean : 0.0;
    for (std::size_t n = 0; n < ddx.size(); ++n) ddx[n] = 1.0 - rho.values[n] + offset;
    state.ddx = std::move(ddx);
    return state;
}

std::vector<double> field_time_derivative(const DistributionField& field, const PhaseFunction& source_primitive,
                                          double t) {
    if (!field.grid) throw std::invalid_argument("field_time_derivative: field has no grid");
    const PhaseGrid& g = *field.grid;
    const double dv = g.vgrid.spacing();
    std::vector<double> out(g.nx(), 0.0);
    for (std::size_t n = 0; n < g.nx(); ++n) {
        const auto row = field.values.row(n);
        const double x = g.xgrid.nodes[n];
        double sum = 0.0;
        for (std::size_t m = 0; m < g.nv(); ++m) {
            const double v = g.vgrid.nodes[m];
            sum += v * row[m];
            if (source_primitive) sum -= source_primitive(t, x, v);
        }
        out[n] = dv * sum;
    }
    return out;
}

} // namespace vpspec
