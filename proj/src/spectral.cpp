#include "vpspec/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vpspec {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double singularity_eps = 1e-12;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

double sign_alternating(std::size_t k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// FFTW's planner is not re-entrant; execution of a finished plan is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(void* p) const noexcept { fftw_free(p); }
};

template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <typename T>
FftwBuffer<T> fftw_alloc(std::size_t n) {
    void* p = fftw_malloc(sizeof(T) * n);
    if (p == nullptr) throw std::bad_alloc{};
    return FftwBuffer<T>(static_cast<T*>(p));
}

/// One-shot real-to-complex transform: out[k] = Σ_l in[l] e^{-2πikl/N}, k = 0..N/2.
std::vector<std::complex<double>> forward_real_dft(std::span<const double> in) {
    const std::size_t n = in.size();
    auto buf_in = fftw_alloc<double>(n);
    auto buf_out = fftw_alloc<fftw_complex>(n / 2 + 1);
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), buf_in.get(), buf_out.get(), FFTW_ESTIMATE);
    }
    std::copy(in.begin(), in.end(), buf_in.get());
    fftw_execute(plan);
    std::vector<std::complex<double>> out(n / 2 + 1);
    for (std::size_t k = 0; k <= n / 2; ++k) out[k] = {buf_out[k][0], buf_out[k][1]};
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

/// Inverse of forward_real_dft without the 1/N factor.
std::vector<double> inverse_real_dft(std::span<const std::complex<double>> in, std::size_t n) {
    auto buf_in = fftw_alloc<fftw_complex>(n / 2 + 1);
    auto buf_out = fftw_alloc<double>(n);
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_c2r_1d(static_cast<int>(n), buf_in.get(), buf_out.get(), FFTW_ESTIMATE);
    }
    for (std::size_t k = 0; k <= n / 2; ++k) {
        buf_in[k][0] = in[k].real();
        buf_in[k][1] = in[k].imag();
    }
    fftw_execute(plan);
    std::vector<double> out(buf_out.get(), buf_out.get() + n);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

void require_even(const NodeGrid1D& grid, const char* what) {
    if (grid.count % 2 != 0)
        throw std::invalid_argument(std::string(what) + ": node count must be even, got " +
                                    std::to_string(grid.count));
}

void require_size(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                    " values, got " + std::to_string(got));
}

// Circulant entry of the s-th derivative in reference coordinates for node
// offset p = n - i, summed from the real Fourier multipliers.
double reference_derivative_entry(std::size_t count, int order, std::size_t p) {
    const double theta = two_pi * static_cast<double>(p) / static_cast<double>(count);
    const std::size_t half = count / 2;
    const double phase = order * std::numbers::pi / 2.0;
    double sum = 0.0;
    for (std::size_t k = 1; k < half; ++k) {
        const double kk = static_cast<double>(k);
        sum += 2.0 * std::pow(kk, order) * std::cos(kk * theta + phase);
    }
    if (order % 2 == 0) {
        // Nyquist cosine survives even derivatives; its sine partner vanishes on the nodes.
        const double sign = (order / 2) % 2 == 0 ? 1.0 : -1.0;
        sum += sign * std::pow(static_cast<double>(half), order) * sign_alternating(p);
    }
    return sum / static_cast<double>(count);
}

std::vector<double> apply_derivative_fft(const DerivativeMatrix& d, std::span<const double> values) {
    const std::size_t n = d.size;
    auto spectrum = forward_real_dft(values);
    const std::complex<double> i_unit(0.0, 1.0);
    for (std::size_t k = 0; k <= n / 2; ++k) {
        const std::complex<double> mult = std::pow(i_unit * (static_cast<double>(k) * d.scale), d.order);
        spectrum[k] *= mult;
    }
    if (d.order % 2 != 0) spectrum[n / 2] = 0.0;
    if (d.order % 2 == 0) spectrum[n / 2] = spectrum[n / 2].real();
    auto out = inverse_real_dft(spectrum, n);
    for (double& v : out) v /= static_cast<double>(n);
    return out;
}

} // namespace

double NodeGrid1D::scale() const noexcept { return two_pi / length; }

double NodeGrid1D::to_reference(double x) const noexcept { return two_pi * (x - origin) / length; }

double NodeGrid1D::wrap(double x) const noexcept {
    double r = std::fmod(x - origin, length);
    if (r < 0.0) r += length;
    if (r >= length) r = 0.0;
    return origin + r;
}

NodeGrid1D make_grid(std::size_t count, double origin, double length) {
    if (count < 4)
        throw std::invalid_argument("make_grid: node count must be at least 4, got " + std::to_string(count));
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("make_grid: interval length must be positive");
    if (!std::isfinite(origin)) throw std::invalid_argument("make_grid: origin must be finite");

    NodeGrid1D grid{count, origin, length, std::vector<double>(count)};
    for (std::size_t i = 0; i < count; ++i)
        grid.nodes[i] = origin + length * static_cast<double>(i) / static_cast<double>(count);
    return grid;
}

DerivativeMatrix derivative_matrix(const NodeGrid1D& grid, int order) {
    if (order < 0) throw std::invalid_argument("derivative_matrix: order must be non-negative");
    require_even(grid, "derivative_matrix");

    const std::size_t n_nodes = grid.count;
    DerivativeMatrix d{n_nodes, order, grid.scale(), std::vector<double>(n_nodes * n_nodes, 0.0)};
    const double factor = std::pow(grid.scale(), order);
    const double nn = static_cast<double>(n_nodes);

    if (order == 0) {
        for (std::size_t n = 0; n < n_nodes; ++n) d.entries[n * n_nodes + n] = 1.0;
        return d;
    }

    if (order <= 2) {
        for (std::size_t n = 0; n < n_nodes; ++n) {
            for (std::size_t i = 0; i < n_nodes; ++i) {
                double value;
                if (i == n) {
                    value = (order == 1) ? 0.0 : -nn * nn / 12.0 - 1.0 / 6.0;
                } else {
                    const double half_gap = std::numbers::pi * (static_cast<double>(n) - static_cast<double>(i)) / nn;
                    const double sign = sign_alternating(n + i);
                    if (order == 1) {
                        value = 0.5 * sign / std::tan(half_gap);
                    } else {
                        const double s = std::sin(half_gap);
                        value = -0.5 * sign / (s * s);
                    }
                }
                d.entries[n * n_nodes + i] = factor * value;
            }
        }
        return d;
    }

    std::vector<double> column(n_nodes);
    for (std::size_t p = 0; p < n_nodes; ++p) column[p] = factor * reference_derivative_entry(n_nodes, order, p);
    for (std::size_t n = 0; n < n_nodes; ++n)
        for (std::size_t i = 0; i < n_nodes; ++i)
            d.entries[n * n_nodes + i] = column[(n + n_nodes - i) % n_nodes];
    return d;
}

std::vector<double> apply_derivative(const DerivativeMatrix& d, std::span<const double> values) {
    require_size(d.size, values.size(), "apply_derivative");
    if (d.size > dense_apply_limit && is_power_of_two(d.size)) return apply_derivative_fft(d, values);

    std::vector<double> out(d.size, 0.0);
    for (std::size_t n = 0; n < d.size; ++n) {
        const double* row = d.entries.data() + n * d.size;
        double acc = 0.0;
        for (std::size_t i = 0; i < d.size; ++i) acc += row[i] * values[i];
        out[n] = acc;
    }
    return out;
}

double basis_value(const NodeGrid1D& grid, std::size_t i, double x) {
    if (i >= grid.count) throw std::out_of_range("basis_value: node index out of range");
    require_even(grid, "basis_value");
    const double nn = static_cast<double>(grid.count);
    double delta = grid.to_reference(x) - two_pi * static_cast<double>(i) / nn;
    delta = std::remainder(delta, two_pi); // (-π, π]
    if (std::abs(delta) < singularity_eps) return 1.0;
    return std::sin(nn * delta / 2.0) / (nn * std::tan(delta / 2.0));
}

double quadrature(const NodeGrid1D& grid, std::span<const double> values) {
    require_size(grid.count, values.size(), "quadrature");
    double sum = 0.0;
    for (double v : values) sum += v;
    return grid.spacing() * sum;
}

FourierModes analyze_modes(const NodeGrid1D& grid, std::span<const double> values) {
    require_even(grid, "analyze_modes");
    require_size(grid.count, values.size(), "analyze_modes");
    const std::size_t n = grid.count;
    const std::size_t half = n / 2;
    const double nn = static_cast<double>(n);

    FourierModes modes{0.0, std::vector<double>(half), std::vector<double>(half)};
    if (is_power_of_two(n)) {
        const auto spectrum = forward_real_dft(values);
        modes.mean = spectrum[0].real() / nn;
        for (std::size_t k = 1; k <= half; ++k) {
            modes.cos_coeffs[k - 1] = 2.0 * spectrum[k].real() / nn;
            modes.sin_coeffs[k - 1] = -2.0 * spectrum[k].imag() / nn;
        }
        // The Nyquist sine coefficient is identically zero on the grid.
        modes.sin_coeffs[half - 1] = 0.0;
        return modes;
    }

    double sum = 0.0;
    for (double v : values) sum += v;
    modes.mean = sum / nn;
    for (std::size_t k = 1; k <= half; ++k) {
        double a = 0.0;
        double b = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            const double arg = two_pi * static_cast<double>(k * l % n) / nn;
            a += values[l] * std::cos(arg);
            b += values[l] * std::sin(arg);
        }
        modes.cos_coeffs[k - 1] = 2.0 * a / nn;
        modes.sin_coeffs[k - 1] = 2.0 * b / nn;
    }
    modes.sin_coeffs[half - 1] = 0.0;
    return modes;
}

std::vector<double> synthesize_modes(const FourierModes& modes, const NodeGrid1D& grid) {
    require_even(grid, "synthesize_modes");
    const std::size_t n = grid.count;
    const std::size_t half = n / 2;
    require_size(half, modes.cos_coeffs.size(), "synthesize_modes (cosine coefficients)");
    require_size(half, modes.sin_coeffs.size(), "synthesize_modes (sine coefficients)");
    const double nn = static_cast<double>(n);

    if (is_power_of_two(n)) {
        std::vector<std::complex<double>> spectrum(half + 1);
        spectrum[0] = modes.mean;
        for (std::size_t k = 1; k < half; ++k)
            spectrum[k] = 0.5 * std::complex<double>(modes.cos_coeffs[k - 1], -modes.sin_coeffs[k - 1]);
        spectrum[half] = modes.cos_coeffs[half - 1];
        return inverse_real_dft(spectrum, n);
    }

    std::vector<double> out(n, modes.mean);
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t k = 1; k <= half; ++k) {
            const double arg = two_pi * static_cast<double>(k * l % n) / nn;
            out[l] += modes.cos_coeffs[k - 1] * std::cos(arg) + modes.sin_coeffs[k - 1] * std::sin(arg);
        }
    }
    return out;
}

} // namespace vpspec
