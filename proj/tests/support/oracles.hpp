#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library: every quantity is recomputed from its defining formula,
// in long double where cancellation matters.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using ld = long double;
inline constexpr ld pi_l = std::numbers::pi_v<long double>;

// Cardinal function as the truncated Dirichlet series
// (1/N)[1 + 2 Σ_{k<N/2} cos(k d) + cos(N d / 2)], d = θ − θ_i.
inline double dirichlet_basis(std::size_t N, double origin, double length, std::size_t i, double x) {
    const ld theta = 2 * pi_l * (static_cast<ld>(x) - origin) / length;
    const ld d = theta - 2 * pi_l * static_cast<ld>(i) / static_cast<ld>(N);
    ld sum = 1;
    for (std::size_t k = 1; k < N / 2; ++k) sum += 2 * std::cos(static_cast<ld>(k) * d);
    sum += std::cos(static_cast<ld>(N) / 2 * d);
    return static_cast<double>(sum / static_cast<ld>(N));
}

// s-th physical derivative of cardinal function i at node n, by termwise
// differentiation of the Dirichlet series. The Nyquist term contributes
// only for even s (its odd derivatives vanish at the nodes).
inline double dirichlet_derivative(std::size_t N, double length, std::size_t n, std::size_t i, int s) {
    const ld d = 2 * pi_l * (static_cast<ld>(n) - static_cast<ld>(i)) / static_cast<ld>(N);
    const ld phase = pi_l / 2 * s;
    ld sum = 0;
    for (std::size_t k = 1; k < N / 2; ++k)
        sum += 2 * std::pow(static_cast<ld>(k), s) * std::cos(static_cast<ld>(k) * d + phase);
    if (s % 2 == 0) {
        const ld h = static_cast<ld>(N) / 2;
        sum += std::pow(h, s) * std::cos(h * d + phase);
    }
    const ld scale = std::pow(2 * pi_l / length, s);
    return static_cast<double>(scale * sum / static_cast<ld>(N));
}

struct Modes {
    double mean = 0;
    std::vector<double> a; // a[k-1] for k = 1..N/2
    std::vector<double> b;
};

// Real DFT coefficients by direct trigonometric sums, all with weight 2/N.
inline Modes direct_modes(const std::vector<double>& values) {
    const std::size_t N = values.size();
    Modes m;
    ld mean = 0;
    for (double v : values) mean += v;
    m.mean = static_cast<double>(mean / N);
    for (std::size_t k = 1; k <= N / 2; ++k) {
        ld a = 0, b = 0;
        for (std::size_t l = 0; l < N; ++l) {
            const ld arg = 2 * pi_l * static_cast<ld>(k * l % N) / N;
            a += values[l] * std::cos(arg);
            b += values[l] * std::sin(arg);
        }
        m.a.push_back(static_cast<double>(2 * a / N));
        m.b.push_back(static_cast<double>(2 * b / N));
    }
    return m;
}

// Manufactured pair, typed in again from its closed form.
inline double mms_f(double t, double x, double v) {
    return 2.0 / std::sqrt(std::numbers::pi) * (1.0 - std::cos(2 * x - 2 * std::numbers::pi * t)) *
           std::exp(-4 * v * v);
}
inline double mms_e(double t, double x) { return 0.5 * std::sin(2 * x - 2 * std::numbers::pi * t); }

// f_t + v f_x − E f_v of the manufactured pair by centered differences.
inline double vlasov_lhs_fd(double t, double x, double v, double h) {
    const double ft = (mms_f(t + h, x, v) - mms_f(t - h, x, v)) / (2 * h);
    const double fx = (mms_f(t, x + h, v) - mms_f(t, x - h, v)) / (2 * h);
    const double fv = (mms_f(t, x, v + h) - mms_f(t, x, v - h)) / (2 * h);
    return ft + v * fx - mms_e(t, x) * fv;
}

inline double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
    if (intervals % 2) ++intervals;
    const double h = (b - a) / intervals;
    double sum = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

// erf by its Maclaurin series; adequate for |z| ≲ 3 in long double.
inline std::complex<ld> erf_series(std::complex<ld> z) {
    std::complex<ld> term = z;
    std::complex<ld> sum = z;
    const std::complex<ld> z2 = z * z;
    for (int n = 1; n < 200; ++n) {
        term *= -z2 / static_cast<ld>(n);
        const std::complex<ld> add = term / static_cast<ld>(2 * n + 1);
        sum += add;
        if (std::abs(add) < 1e-30L * std::abs(sum)) break;
    }
    return sum * (2 / std::sqrt(pi_l));
}

// Plasma dispersion function Z(ζ) = i√π e^{−ζ²} erfc(−iζ).
inline std::complex<ld> plasma_z(std::complex<ld> zeta) {
    const std::complex<ld> i(0, 1);
    return i * std::sqrt(pi_l) * std::exp(-zeta * zeta) * (ld(1) - erf_series(-i * zeta));
}

// Root of 1 + (1 + ζZ(ζ))/k² = 0, ζ = ω/(√2 k), for a unit Maxwellian,
// by the secant method from a guess near the Bohm-Gross frequency.
inline std::complex<double> landau_root(double k, std::complex<double> guess = {1.4, -0.15}) {
    auto eps = [k](std::complex<ld> w) {
        const std::complex<ld> zeta = w / (std::sqrt(ld(2)) * static_cast<ld>(k));
        return ld(1) + (ld(1) + zeta * plasma_z(zeta)) / static_cast<ld>(k * k);
    };
    std::complex<ld> w0(guess.real(), guess.imag());
    std::complex<ld> w1 = w0 * ld(1.01);
    std::complex<ld> f0 = eps(w0), f1 = eps(w1);
    for (int it = 0; it < 100 && std::abs(w1 - w0) > 1e-16L; ++it) {
        const std::complex<ld> w2 = w1 - f1 * (w1 - w0) / (f1 - f0);
        w0 = w1;
        f0 = f1;
        w1 = w2;
        f1 = eps(w1);
    }
    return {static_cast<double>(w1.real()), static_cast<double>(w1.imag())};
}

// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace oracle
