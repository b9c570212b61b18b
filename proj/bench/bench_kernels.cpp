// Serial reference kernels against their OpenMP versions on phase-space
// sized inputs. Prints the best-of-R wall time of each and the speedup.

#include "vpspec/kernels.hpp"
#include "vpspec/phase_space.hpp"

#include <fmt/format.h>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>

using namespace vpspec;

namespace {

double best_time(int repeats, const std::function<void()>& body) {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < repeats; ++r) {
        const double t0 = omp_get_wtime();
        body();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, double scale) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    Matrix m(rows, cols);
    for (double& v : m.flat()) v = dist(rng);
    return m;
}

void report(const std::string& name, double serial, double parallel, bool identical) {
    fmt::print("{:<28} serial {:>10.3f} ms   parallel {:>10.3f} ms   speedup {:>5.2f}   {}\n", name,
               1e3 * serial, 1e3 * parallel, serial / parallel, identical ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    const std::size_t nx = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 64;
    const std::size_t nv = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 256;
    const int repeats = argc > 3 ? std::atoi(argv[3]) : 5;
    fmt::print("grid {} x {}, {} OpenMP threads, best of {}\n", nx, nv, omp_get_max_threads(), repeats);

    const auto grid = make_phase_grid(nx, 0.0, 4.0 * std::numbers::pi, nv, -5.0, 5.0);
    std::mt19937_64 rng(20240611);
    const Matrix c = random_matrix(nx, nv, rng, 1.0);
    const Matrix dx = random_matrix(nx, nv, rng, 0.05);
    const Matrix dv = random_matrix(nx, nv, rng, 0.05);
    std::vector<double> e(nx);
    for (double& x : e) x = std::uniform_real_distribution<double>(-0.1, 0.1)(rng);

    bool all_identical = true;
    {
        Matrix a, b;
        const double ts = best_time(repeats, [&] { kernels::serial::apply_x(grid->dx1, c, a); });
        const double tp = best_time(repeats, [&] { kernels::parallel::apply_x(grid->dx1, c, b); });
        report("apply_x", ts, tp, a == b);
        all_identical = all_identical && a == b;
    }
    {
        Matrix a, b;
        const double ts = best_time(repeats, [&] { kernels::serial::apply_v(grid->dv1, c, a); });
        const double tp = best_time(repeats, [&] { kernels::parallel::apply_v(grid->dv1, c, b); });
        report("apply_v", ts, tp, a == b);
        all_identical = all_identical && a == b;
    }
    {
        Matrix a, b;
        const double ts = best_time(repeats, [&] { kernels::serial::assemble_transport(grid->vgrid.nodes, e, c, c, a); });
        const double tp = best_time(repeats, [&] { kernels::parallel::assemble_transport(grid->vgrid.nodes, e, c, c, b); });
        report("assemble_transport", ts, tp, a == b);
        all_identical = all_identical && a == b;
    }
    {
        Matrix a(nx, nv), b(nx, nv);
        const double ts = best_time(repeats, [&] { kernels::serial::accumulate_taylor_term(c, dx, dv, 3, 2, 0.25, a); });
        const double tp = best_time(repeats, [&] { kernels::parallel::accumulate_taylor_term(c, dx, dv, 3, 2, 0.25, b); });
        report("accumulate_taylor_term", ts, tp, a == b);
        all_identical = all_identical && a == b;
    }
    {
        // The exact evaluation is O(N²M²); bench it on a reduced grid.
        const std::size_t sx = std::min<std::size_t>(nx, 16);
        const std::size_t sv = std::min<std::size_t>(nv, 32);
        const auto small = make_phase_grid(sx, 0.0, 4.0 * std::numbers::pi, sv, -5.0, 5.0);
        const Matrix cs = random_matrix(sx, sv, rng, 1.0);
        Matrix px(sx, sv), pv(sx, sv);
        for (std::size_t n = 0; n < sx; ++n)
            for (std::size_t m = 0; m < sv; ++m) {
                px(n, m) = small->xgrid.nodes[n] - 0.1;
                pv(n, m) = small->vgrid.nodes[m] + 0.05;
            }
        Matrix a, b;
        const double ts = best_time(repeats, [&] { kernels::serial::basis_sum_eval(small->xgrid, small->vgrid, cs, px, pv, a); });
        const double tp = best_time(repeats, [&] { kernels::parallel::basis_sum_eval(small->xgrid, small->vgrid, cs, px, pv, b); });
        report(fmt::format("basis_sum_eval {}x{}", sx, sv), ts, tp, a == b);
        all_identical = all_identical && a == b;
    }
    return all_identical ? 0 : 1;
}
