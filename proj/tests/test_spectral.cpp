#include "oracles.hpp"

#include "vpspec/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace vpspec;
using std::numbers::pi;

namespace {

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

} // namespace

TEST_CASE("make_grid places equispaced nodes") {
    auto g = make_grid(4, 0.0, 2 * pi);
    REQUIRE(g.nodes.size() == 4);
    CHECK(g.nodes[0] == 0.0);
    CHECK(g.nodes[1] == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(g.nodes[2] == doctest::Approx(pi).epsilon(1e-15));
    CHECK(g.nodes[3] == doctest::Approx(3 * pi / 2).epsilon(1e-15));

    auto h = make_grid(4, -5.0, 10.0);
    CHECK(h.nodes[0] == -5.0);
    CHECK(h.nodes[1] == -2.5);
    CHECK(h.nodes[2] == 0.0);
    CHECK(h.nodes[3] == 2.5);
}

TEST_CASE("make_grid rejects degenerate input") {
    CHECK_THROWS_AS(make_grid(2, 0.0, 2 * pi), std::invalid_argument);
    CHECK_THROWS(make_grid(8, 0.0, 0.0));
    CHECK_THROWS(make_grid(8, 0.0, -1.0));
}

TEST_CASE("wrap maps into the period") {
    auto g = make_grid(8, -1.0, 4.0);
    CHECK(g.wrap(3.5) == doctest::Approx(-0.5));
    CHECK(g.wrap(-1.5) == doctest::Approx(2.5));
    CHECK(g.wrap(0.25) == doctest::Approx(0.25));
}

TEST_CASE("derivative matrix diagonals") {
    auto g = make_grid(4, 0.0, 2 * pi);
    auto d1 = derivative_matrix(g, 1);
    auto d2 = derivative_matrix(g, 2);
    for (std::size_t n = 0; n < 4; ++n) {
        CHECK(d1(n, n) == 0.0);
        CHECK(d2(n, n) == doctest::Approx(-1.5).epsilon(1e-14));
    }
}

TEST_CASE("derivative matrices match the termwise series") {
    for (std::size_t N : {4u, 8u, 16u}) {
        for (double L : {2 * pi, 4 * pi, 10.0}) {
            auto g = make_grid(N, -1.0, L);
            for (int s = 1; s <= 5; ++s) {
                auto d = derivative_matrix(g, s);
                const double scale = std::pow(2 * pi / L, s) * std::pow(N / 2.0, s);
                for (std::size_t n = 0; n < N; ++n)
                    for (std::size_t i = 0; i < N; ++i)
                        CHECK(std::abs(d(n, i) - oracle::dirichlet_derivative(N, L, n, i, s)) <= 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("first derivative of a resolved mode") {
    auto g = make_grid(32, 0.0, 2 * pi);
    std::vector<double> s(32), c(32);
    for (std::size_t n = 0; n < 32; ++n) {
        s[n] = std::sin(g.nodes[n]);
        c[n] = std::cos(g.nodes[n]);
    }
    CHECK(max_diff(apply_derivative(derivative_matrix(g, 1), s), c) <= 1e-12);
}

TEST_CASE("derivative of a constant and order zero") {
    auto g = make_grid(16, 0.0, 3.0);
    std::vector<double> one(16, 1.0);
    for (double x : apply_derivative(derivative_matrix(g, 1), one)) CHECK(std::abs(x) <= 1e-13);
    std::vector<double> r(16);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1, 1);
    for (auto& x : r) x = u(rng);
    CHECK(apply_derivative(derivative_matrix(g, 0), r) == r);
}

TEST_CASE("large grids take the transform path with the same result") {
    auto g = make_grid(512, 0.0, 2 * pi);
    std::vector<double> f(512), df(512);
    for (std::size_t n = 0; n < 512; ++n) {
        const double x = g.nodes[n];
        f[n] = std::sin(3 * x) + 0.5 * std::cos(7 * x);
        df[n] = 3 * std::cos(3 * x) - 3.5 * std::sin(7 * x);
    }
    CHECK(max_diff(apply_derivative(derivative_matrix(g, 1), f), df) <= 1e-10);
}

TEST_CASE("basis function against the direct series") {
    auto g = make_grid(4, 0.0, 2 * pi);
    CHECK(basis_value(g, 0, pi / 4) == doctest::Approx(0.603553390593273762).epsilon(1e-14));
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 9.0);
    for (std::size_t N : {4u, 6u, 16u}) {
        auto h = make_grid(N, -1.0, 7.0);
        for (int trial = 0; trial < 20; ++trial) {
            const double x = u(rng);
            for (std::size_t i = 0; i < N; ++i)
                CHECK(basis_value(h, i, x) == doctest::Approx(oracle::dirichlet_basis(N, -1.0, 7.0, i, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("quadrature exact on low modes") {
    auto g = make_grid(8, 0.0, 2 * pi);
    std::vector<double> one(8, 1.0), s(8), s2(8);
    for (std::size_t n = 0; n < 8; ++n) {
        s[n] = std::sin(g.nodes[n]);
        s2[n] = s[n] * s[n];
    }
    CHECK(quadrature(g, one) == doctest::Approx(2 * pi).epsilon(1e-15));
    CHECK(std::abs(quadrature(g, s)) <= 1e-15);
    CHECK(quadrature(g, s2) == doctest::Approx(pi).epsilon(1e-15));
}

TEST_CASE("analyze_modes on single modes") {
    auto g = make_grid(8, 0.0, 2 * pi);
    std::vector<double> a(8), b(8), z(8, 0.0);
    for (std::size_t n = 0; n < 8; ++n) {
        a[n] = 1 + std::cos(g.nodes[n]);
        b[n] = std::sin(2 * g.nodes[n]);
    }
    auto ma = analyze_modes(g, a);
    CHECK(ma.mean == doctest::Approx(1.0));
    CHECK(ma.cos_coeffs[0] == doctest::Approx(1.0));
    for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(ma.cos_coeffs[k]) <= 1e-15);
    for (double c : ma.sin_coeffs) CHECK(std::abs(c) <= 1e-15);

    auto mb = analyze_modes(g, b);
    CHECK(mb.sin_coeffs[1] == doctest::Approx(1.0));
    CHECK(std::abs(mb.mean) <= 1e-15);

    auto mz = analyze_modes(g, z);
    CHECK(mz.mean == 0.0);
    for (double c : mz.cos_coeffs) CHECK(c == 0.0);
}

TEST_CASE("analyze_modes against direct sums") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (std::size_t N : {6u, 16u, 64u}) {
        auto g = make_grid(N, 2.0, 5.0);
        std::vector<double> r(N);
        for (auto& x : r) x = u(rng);
        auto m = analyze_modes(g, r);
        auto o = oracle::direct_modes(r);
        CHECK(m.mean == doctest::Approx(o.mean).epsilon(1e-13));
        for (std::size_t k = 0; k < N / 2; ++k) {
            CHECK(std::abs(m.cos_coeffs[k] - o.a[k]) <= 1e-13);
            CHECK(std::abs(m.sin_coeffs[k] - o.b[k]) <= 1e-13);
        }
    }
}

TEST_CASE("synthesize inverts analyze") {
    auto g = make_grid(32, 0.0, 2 * pi);
    std::vector<double> a(32), r(32, 0.0);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1, 1);
    // Random smooth data: modes strictly below Nyquist.
    for (std::size_t n = 0; n < 32; ++n) a[n] = 1 + std::cos(g.nodes[n]);
    for (std::size_t k = 0; k < 16; ++k) {
        const double c = u(rng), s = u(rng);
        for (std::size_t n = 0; n < 32; ++n) r[n] += c * std::cos(k * g.nodes[n]) + s * std::sin(k * g.nodes[n]);
    }
    CHECK(max_diff(synthesize_modes(analyze_modes(g, a), g), a) <= 1e-13);
    CHECK(max_diff(synthesize_modes(analyze_modes(g, r), g), r) <= 1e-12);
    FourierModes zero{0.0, std::vector<double>(16, 0.0), std::vector<double>(16, 0.0)};
    for (double x : synthesize_modes(zero, g)) CHECK(x == 0.0);
}
