#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vpspec {

/// Equispaced periodic nodes on [origin, origin + length). The right endpoint
/// is identified with the left one.
struct NodeGrid1D {
    std::size_t count = 0;
    double origin = 0.0;
    double length = 0.0;
    std::vector<double> nodes;

    double spacing() const noexcept { return length / static_cast<double>(count); }

    /// 2π/L, the factor mapping reference derivatives to physical ones.
    double scale() const noexcept;

    /// Affine map to the reference angle θ = 2π(x − origin)/L (not wrapped).
    double to_reference(double x) const noexcept;

    /// Wraps a physical coordinate into [origin, origin + length).
    double wrap(double x) const noexcept;

    bool operator==(const NodeGrid1D&) const = default;
};

/// Dense spectral differentiation matrix in physical coordinates.
/// entries[n * size + i] is the order-th derivative of the i-th cardinal
/// function evaluated at node n.
struct DerivativeMatrix {
    std::size_t size = 0;
    int order = 0;
    double scale = 1.0; ///< 2π/L of the grid the matrix was built on
    std::vector<double> entries;

    double operator()(std::size_t n, std::size_t i) const noexcept { return entries[n * size + i]; }
};

/// Real discrete Fourier coefficients: values ≈ mean + Σ a_n cos(nθ) + b_n sin(nθ).
/// cos_coeffs[n - 1] holds a_n for n = 1..count/2.
struct FourierModes {
    double mean = 0.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;
};

/// Size threshold above which apply_derivative switches to the FFT path.
inline constexpr std::size_t dense_apply_limit = 256;

NodeGrid1D make_grid(std::size_t count, double origin, double length);

/// Orders 1 and 2 use the closed-form cardinal-function derivatives; higher
/// orders are built from the Fourier multipliers (ik)^s with the Nyquist mode
/// dropped for odd s. Requires an even node count.
DerivativeMatrix derivative_matrix(const NodeGrid1D& grid, int order);

std::vector<double> apply_derivative(const DerivativeMatrix& d, std::span<const double> values);

/// Fourier-Lagrange cardinal function B_i at physical coordinate x.
double basis_value(const NodeGrid1D& grid, std::size_t i, double x);

/// Trapezoidal (equivalently Gauss) rule over one period of the grid.
double quadrature(const NodeGrid1D& grid, std::span<const double> values);

FourierModes analyze_modes(const NodeGrid1D& grid, std::span<const double> values);

std::vector<double> synthesize_modes(const FourierModes& modes, const NodeGrid1D& grid);

} // namespace vpspec
