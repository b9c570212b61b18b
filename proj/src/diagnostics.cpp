#include "vpspec/diagnostics.hpp"

#include <cmath>
#include <string>
#include <stdexcept>

namespace vpspec {

namespace {

const PhaseGrid& grid_of(const DistributionField& field, const char* what) {
    if (!field.grid) throw std::invalid_argument(std::string(what) + ": field has no grid");
    return *field.grid;
}

double relative_norm_ratio(double diff_sq, double ref_sq, const char* what) {
    if (!(ref_sq > 0.0)) throw std::invalid_argument(std::string(what) + ": reference has zero norm");
    return std::sqrt(diff_sq / ref_sq);
}

} // namespace

double total_particles(const DistributionField& field) {
    const PhaseGrid& g = grid_of(field, "total_particles");
    double sum = 0.0;
    for (double c : field.values.flat()) sum += c;
    return g.cell_area() * sum;
}

double total_momentum(const DistributionField& field) {
    const PhaseGrid& g = grid_of(field, "total_momentum");
    double sum = 0.0;
    for (std::size_t n = 0; n < g.nx(); ++n) {
        const auto row = field.values.row(n);
        for (std::size_t m = 0; m < g.nv(); ++m) sum += g.vgrid.nodes[m] * row[m];
    }
    return g.cell_area() * sum;
}

double total_energy(const DistributionField& field, const ElectricFieldState& efield) {
    const PhaseGrid& g = grid_of(field, "total_energy");
    if (efield.nodal.size() != g.nx()) throw std::invalid_argument("total_energy: field size mismatch");
    double kinetic = 0.0;
    for (std::size_t n = 0; n < g.nx(); ++n) {
        const auto row = field.values.row(n);
        for (std::size_t m = 0; m < g.nv(); ++m) {
            const double v = g.vgrid.nodes[m];
            kinetic += v * v * row[m];
        }
    }
    double potential = 0.0;
    for (double e : efield.nodal) potential += e * e;
    return 0.5 * (g.cell_area() * kinetic + g.xgrid.spacing() * potential);
}

double first_mode_amplitude(const ElectricFieldState& efield) {
    if (efield.modes.cos_coeffs.empty()) return 0.0;
    return std::abs(efield.modes.cos_coeffs.front());
}

double first_mode_magnitude(const ElectricFieldState& efield) {
    if (efield.modes.cos_coeffs.empty()) return 0.0;
    return std::hypot(efield.modes.cos_coeffs.front(), efield.modes.sin_coeffs.front());
}

double l2_relative_error(const DistributionField& a, const DistributionField& b) {
    grid_of(a, "l2_relative_error");
    grid_of(b, "l2_relative_error");
    if (!(a.grid == b.grid || (a.grid->xgrid == b.grid->xgrid && a.grid->vgrid == b.grid->vgrid)))
        throw std::invalid_argument("l2_relative_error: fields live on different grids");
    // The common quadrature weight cancels in the ratio.
    double diff = 0.0;
    double ref = 0.0;
    const auto av = a.values.flat();
    const auto bv = b.values.flat();
    for (std::size_t k = 0; k < av.size(); ++k) {
        const double d = av[k] - bv[k];
        diff += d * d;
        ref += bv[k] * bv[k];
    }
    return relative_norm_ratio(diff, ref, "l2_relative_error");
}

double l2_relative_error_field(std::span<const double> a, std::span<const double> b, const NodeGrid1D& xgrid) {
    if (a.size() != b.size() || a.size() != xgrid.count)
        throw std::invalid_argument("l2_relative_error_field: length mismatch");
    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        diff += d * d;
        ref += b[k] * b[k];
    }
    return relative_norm_ratio(diff, ref, "l2_relative_error_field");
}

DiagnosticsRecord make_record(double t, const DistributionField& field, const ElectricFieldState& efield,
                              bool cfl_ok) {
    return DiagnosticsRecord{t,
                             total_particles(field),
                             total_momentum(field),
                             total_energy(field, efield),
                             first_mode_amplitude(efield),
                             first_mode_magnitude(efield),
                             cfl_ok};
}

} // namespace vpspec
