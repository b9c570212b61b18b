#include "temp_dir.hpp"

#include "vpspec/errors.hpp"
#include "vpspec/scenarios.hpp"
#include "vpspec/snapshot.hpp"

#include <doctest.h>

#include <numbers>
#include <sstream>

using namespace vpspec;

TEST_CASE("snapshot round trip is bit-exact") {
    auto cfg = default_scenario(ScenarioKind::TwoStream);
    auto g = make_phase_grid(8, cfg.x_min, cfg.x_max, 16, cfg.v_min, cfg.v_max);
    auto f = init_field(cfg, g);
    std::stringstream ss;
    write_snapshot(ss, make_snapshot(f, 0.0));
    auto back = read_snapshot(ss);
    CHECK(back.nx == 8);
    CHECK(back.nv == 16);
    CHECK(back.x_max == cfg.x_max);
    CHECK(back.v_min == cfg.v_min);
    CHECK(back.t == 0.0);
    CHECK(back.values == f.values);

    TempDir dir("snapshot");
    write_snapshot(dir / "s.txt", make_snapshot(f, 1.0 / 3.0));
    auto disk = read_snapshot(dir / "s.txt");
    CHECK(disk.values == f.values);
    CHECK(disk.t == 1.0 / 3.0);
}

TEST_CASE("malformed snapshots") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_snapshot(empty), IoError);
    std::istringstream short_rows("# vpspec snapshot\nN 2\nM 2\nx_min 0\nx_max 1\nv_min 0\nv_max 1\nt 0\n1 2\n3\n");
    CHECK_THROWS_AS(read_snapshot(short_rows), IoError);
    std::istringstream junk("# vpspec snapshot\nN 2\nM 2\nx_min 0\nx_max 1\nv_min 0\nv_max 1\nt 0\n1 2\n3 x\n");
    CHECK_THROWS_AS(read_snapshot(junk), IoError);
    std::istringstream good("# vpspec snapshot\nN 2\nM 2\nx_min 0\nx_max 1\nv_min 0\nv_max 1\nt 0.5\n1 2\n3 4\n");
    auto s = read_snapshot(good);
    CHECK(s.values(1, 0) == 3.0);
    CHECK_THROWS_AS(read_snapshot(std::filesystem::path("/nonexistent/dir/s.txt")), IoError);
}
