#include "oracles.hpp"
#include "temp_dir.hpp"

#include "vpspec/errors.hpp"
#include "vpspec/scenarios.hpp"
#include "vpspec/snapshot.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace vpspec;
using std::numbers::pi;

TEST_CASE("scenario names") {
    for (auto k : {ScenarioKind::Manufactured, ScenarioKind::TwoStream, ScenarioKind::Landau, ScenarioKind::File})
        CHECK(parse_scenario_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_scenario_kind("bump_on_tail"), ConfigError);
}

TEST_CASE("initial values by substitution") {
    CHECK(initial_value(default_scenario(ScenarioKind::Manufactured), 0.0, 0.0) == 0.0);
    CHECK(initial_value(default_scenario(ScenarioKind::Landau), 0.0, 0.0) ==
          doctest::Approx(0.402931703205447).epsilon(1e-14));
    CHECK(initial_value(default_scenario(ScenarioKind::TwoStream), 0.0, 1.0) ==
          doctest::Approx(0.564753836685968576).epsilon(1e-14));
    CHECK_THROWS(initial_value(default_scenario(ScenarioKind::File), 0.0, 0.0));
}

TEST_CASE("manufactured exact solution") {
    auto g = make_phase_grid(32, 0.0, 2 * pi, 32, -pi, pi);
    auto [f, e] = manufactured_exact(0.3, g);
    for (std::size_t n = 0; n < 32; n += 5)
        for (std::size_t m = 0; m < 32; m += 7)
            CHECK(f.values(n, m) == doctest::Approx(oracle::mms_f(0.3, g->xgrid.nodes[n], g->vgrid.nodes[m])).epsilon(1e-14));
    auto [f0, e0] = manufactured_exact(0.0, g);
    CHECK(f0.values(8, 16) == doctest::Approx(2.25675833419102515).epsilon(1e-14)); // x = π/2, v = 0
    CHECK(e0[4] == doctest::Approx(0.5).epsilon(1e-15));                             // x = π/4
    CHECK_THROWS_AS(manufactured_exact(0.0, make_phase_grid(8, 0.0, 1.0, 8, 0.0, 1.0)), std::invalid_argument);
}

TEST_CASE("manufactured source closes the equation") {
    const auto src = manufactured_source();
    for (double t : {0.0, 0.37})
        for (double x : {0.1, 1.3, 4.0})
            for (double v : {-1.2, 0.0, 0.4, 2.5}) {
                const double lhs = oracle::vlasov_lhs_fd(t, x, v, 1e-5);
                CHECK(src.g(t, x, v) == doctest::Approx(lhs).scale(1.0).epsilon(1e-7));
                const double dG = (src.G(t, x + 1e-5, v) - src.G(t, x - 1e-5, v)) / 2e-5;
                CHECK(dG == doctest::Approx(src.g(t, x, v)).scale(1.0).epsilon(1e-7));
            }
    CHECK_FALSE(scenario_source(default_scenario(ScenarioKind::Landau)).present());
    CHECK(scenario_source(default_scenario(ScenarioKind::Manufactured)).present());
}

TEST_CASE("scenario validation") {
    auto ts = default_scenario(ScenarioKind::TwoStream);
    CHECK_NOTHROW(validate(ts));
    ts.alpha = 0.0;
    CHECK_THROWS_AS(validate(ts), ConfigError);
    auto l = default_scenario(ScenarioKind::Landau);
    l.kappa = 0.3;
    CHECK_THROWS_AS(validate(l), ConfigError);
    l = default_scenario(ScenarioKind::Landau);
    l.gamma = -0.1;
    CHECK_THROWS_AS(validate(l), ConfigError);
    auto m = default_scenario(ScenarioKind::Manufactured);
    m.v_max = 4.0;
    CHECK_THROWS_AS(validate(m), ConfigError);
    auto f = default_scenario(ScenarioKind::File);
    CHECK_THROWS_AS(validate(f), ConfigError);
    auto empty = default_scenario(ScenarioKind::Landau);
    empty.x_max = empty.x_min;
    CHECK_THROWS_AS(validate(empty), ConfigError);
}

TEST_CASE("init_field checks the domain and reads snapshots") {
    auto cfg = default_scenario(ScenarioKind::Landau);
    CHECK_THROWS_AS(init_field(cfg, make_phase_grid(8, 0.0, 2 * pi, 8, -10.0, 10.0)), ConfigError);

    auto g = make_phase_grid(8, 0.0, 4 * pi, 16, -10.0, 10.0);
    auto f = init_field(cfg, g);
    TempDir dir("scenario");
    write_snapshot(dir / "init.txt", make_snapshot(f, 0.0));
    auto file = default_scenario(ScenarioKind::File);
    file.x_max = 4 * pi;
    file.v_min = -10.0;
    file.v_max = 10.0;
    file.initial_file = (dir / "init.txt").string();
    CHECK(init_field(file, g).values == f.values);
    CHECK_THROWS_AS(init_field(file, make_phase_grid(16, 0.0, 4 * pi, 16, -10.0, 10.0)), ConfigError);
    file.initial_file = (dir / "missing.txt").string();
    CHECK_THROWS_AS(init_field(file, g), IoError);
}

TEST_CASE("dispersion root oracle") {
    const auto w = oracle::landau_root(0.5);
    CHECK(w.real() == doctest::Approx(1.41566188860453643).epsilon(1e-12));
    CHECK(w.imag() == doctest::Approx(-0.15335946690960483).epsilon(1e-12));
}
