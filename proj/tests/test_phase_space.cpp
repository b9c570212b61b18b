#include "vpspec/phase_space.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace vpspec;
using std::numbers::pi;

namespace {

double max_diff(const Matrix& a, const Matrix& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a.flat()[k] - b.flat()[k]));
    return m;
}

DisplacementField uniform_disp(const PhaseGrid& g, double i, double j) {
    return {Matrix(g.nx(), g.nv(), i), Matrix(g.nx(), g.nv(), j)};
}

} // namespace

TEST_CASE("Taylor evaluation with zero displacement is the identity") {
    auto g = make_phase_grid(8, 0.0, 2 * pi, 8, -pi, pi);
    auto f = DistributionField::sample(g, [](double x, double v) { return std::sin(x) * std::exp(-v * v); });
    for (int s : {1, 2, 5}) CHECK(taylor_shifted_eval(f, uniform_disp(*g, 0, 0), s) == f.values);
}

TEST_CASE("constant fields stay constant") {
    auto g = make_phase_grid(8, 0.0, 2 * pi, 8, -pi, pi);
    auto f = DistributionField::sample(g, [](double, double) { return 2.5; });
    auto t = taylor_shifted_eval(f, uniform_disp(*g, 0.3, -0.2), 6);
    for (double x : t.flat()) CHECK(x == doctest::Approx(2.5).epsilon(1e-13));
    ShiftedPoints pts{Matrix(8, 8, 1.234), Matrix(8, 8, -2.0)};
    const Matrix e = exact_shifted_eval(f, pts);
    for (double x : e.flat()) CHECK(x == doctest::Approx(2.5).epsilon(1e-13));
}

TEST_CASE("Taylor shift of a resolved mode") {
    auto g = make_phase_grid(32, 0.0, 2 * pi, 32, -pi, pi);
    auto f = DistributionField::sample(g, [](double x, double v) { return std::sin(x) * std::cos(v); });
    auto shifted = DistributionField::sample(g, [](double x, double v) { return std::sin(x - 0.01) * std::cos(v); });
    CHECK(max_diff(taylor_shifted_eval(f, uniform_disp(*g, 0.01, 0.0), 8), shifted.values) <= 1e-12);
}

TEST_CASE("exact evaluation at the nodes reproduces the values") {
    auto g = make_phase_grid(8, 0.0, 2 * pi, 6, -3.0, 6.0);
    Matrix c(8, 6);
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> u(-1, 1);
    for (auto& x : c.flat()) x = u(rng);
    DistributionField f(g, c);
    ShiftedPoints pts{Matrix(8, 6), Matrix(8, 6)};
    for (std::size_t n = 0; n < 8; ++n)
        for (std::size_t m = 0; m < 6; ++m) {
            pts.xs(n, m) = g->xgrid.nodes[n];
            pts.vs(n, m) = g->vgrid.nodes[m];
        }
    CHECK(max_diff(exact_shifted_eval(f, pts), c) <= 1e-13);
}

TEST_CASE("exact evaluation wraps periodically") {
    auto g = make_phase_grid(16, 0.0, 2 * pi, 16, -pi, pi);
    auto f = DistributionField::sample(g, [](double x, double v) { return std::cos(x) + std::sin(v); });
    ShiftedPoints pts{Matrix(16, 16, 0.4 + 2 * pi), Matrix(16, 16, 0.3 - 2 * pi)};
    const Matrix e = exact_shifted_eval(f, pts);
    for (double x : e.flat())
        CHECK(x == doctest::Approx(std::cos(0.4) + std::sin(0.3)).epsilon(1e-12));
}

TEST_CASE("transport operator") {
    auto g = make_phase_grid(16, 0.0, 2 * pi, 16, -pi, pi);
    std::vector<double> zero(16, 0.0);
    auto c = DistributionField::sample(g, [](double, double) { return 3.0; });
    const Matrix pc = phi_transport(c, zero);
    for (double x : pc.flat()) CHECK(std::abs(x) <= 1e-13);

    auto s = DistributionField::sample(g, [](double x, double) { return std::sin(x); });
    auto phi = phi_transport(s, zero);
    for (std::size_t n = 0; n < 16; ++n)
        for (std::size_t m = 0; m < 16; ++m)
            CHECK(std::abs(phi(n, m) + g->vgrid.nodes[m] * std::cos(g->xgrid.nodes[n])) <= 1e-12);

    // v-dependence only: Φ = E ∂f/∂v.
    std::vector<double> e(16);
    for (std::size_t n = 0; n < 16; ++n) e[n] = 0.5 * std::sin(g->xgrid.nodes[n]);
    auto w = DistributionField::sample(g, [](double, double v) { return std::cos(v); });
    auto pw = phi_transport(w, e);
    for (std::size_t n = 0; n < 16; ++n)
        for (std::size_t m = 0; m < 16; ++m)
            CHECK(std::abs(pw(n, m) + e[n] * std::sin(g->vgrid.nodes[m])) <= 1e-12);
}

TEST_CASE("distribution fields check shape and finiteness") {
    auto g = make_phase_grid(8, 0.0, 1.0, 8, 0.0, 1.0);
    CHECK_THROWS(DistributionField(g, Matrix(4, 8)));
    auto z = DistributionField::zeros(g);
    CHECK(z.all_finite());
    z.values(1, 1) = std::nan("");
    CHECK_FALSE(z.all_finite());
}
