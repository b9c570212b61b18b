#pragma once

#include "vpspec/dense.hpp"
#include "vpspec/spectral.hpp"

#include <functional>
#include <memory>
#include <span>

namespace vpspec {

/// Tensor grid Ω_x × Ω_v with the first and second derivative matrices on
/// each axis. Higher orders are built on demand by the evaluation routines.
struct PhaseGrid {
    NodeGrid1D xgrid;
    NodeGrid1D vgrid;
    DerivativeMatrix dx1;
    DerivativeMatrix dx2;
    DerivativeMatrix dv1;
    DerivativeMatrix dv2;

    std::size_t nx() const noexcept { return xgrid.count; }
    std::size_t nv() const noexcept { return vgrid.count; }
    double cell_area() const noexcept { return xgrid.spacing() * vgrid.spacing(); }
};

using PhaseGridPtr = std::shared_ptr<const PhaseGrid>;

PhaseGridPtr make_phase_grid(NodeGrid1D xgrid, NodeGrid1D vgrid);
PhaseGridPtr make_phase_grid(std::size_t nx, double x_min, double x_max, std::size_t nv, double v_min, double v_max);

/// Nodal values c[n][m] = f(x_n, v_m) of the trigonometric interpolant.
struct DistributionField {
    PhaseGridPtr grid;
    Matrix values;

    DistributionField() = default;
    DistributionField(PhaseGridPtr g, Matrix v);

    static DistributionField zeros(PhaseGridPtr g);
    static DistributionField sample(PhaseGridPtr g, const std::function<double(double, double)>& f);

    bool all_finite() const noexcept;
};

/// Per-node backward displacements I = x_n − x̃ and J = v_m − ṽ.
struct DisplacementField {
    Matrix dxs;
    Matrix dvs;
};

/// Explicit evaluation points (x̃[n][m], ṽ[n][m]).
struct ShiftedPoints {
    Matrix xs;
    Matrix vs;
};

/// f(x_n − I, v_m − J) from the Taylor expansion of the interpolant truncated
/// after total derivative order `order`.
Matrix taylor_shifted_eval(const DistributionField& field, const DisplacementField& disp, int order);

/// Full double-sum evaluation of the interpolant at arbitrary points, wrapped
/// periodically into the domain. O(N²M²); used as the reference for the
/// Taylor path.
Matrix exact_shifted_eval(const DistributionField& field, const ShiftedPoints& points);

/// Φ[n][m] = −v_m (D_x C)[n][m] + E(x_n) (C D_vᵀ)[n][m].
Matrix phi_transport(const DistributionField& field, std::span<const double> e_nodes);

} // namespace vpspec
