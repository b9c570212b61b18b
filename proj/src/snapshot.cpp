#include "vpspec/snapshot.hpp"

#include "vpspec/errors.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <charconv>
#include <fstream>
#include <string>
#include <system_error>

namespace vpspec {

namespace {

constexpr const char* magic = "# vpspec snapshot";

double parse_real(const std::string& token, const char* what) {
    double value = 0.0;
    const auto* first = token.data();
    const auto* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw IoError(fmt::format("snapshot: bad {} value '{}'", what, token));
    return value;
}

template <typename T>
T read_keyed(std::istream& is, const char* key) {
    std::string name, token;
    if (!(is >> name >> token) || name != key)
        throw IoError(fmt::format("snapshot: expected header field '{}'", key));
    if constexpr (std::is_same_v<T, std::size_t>) {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0)
            throw IoError(fmt::format("snapshot: bad {} value '{}'", key, token));
        return value;
    } else {
        return parse_real(token, key);
    }
}

} // namespace

Snapshot make_snapshot(const DistributionField& field, double t) {
    const PhaseGrid& g = *field.grid;
    return Snapshot{g.nx(),
                    g.nv(),
                    g.xgrid.origin,
                    g.xgrid.origin + g.xgrid.length,
                    g.vgrid.origin,
                    g.vgrid.origin + g.vgrid.length,
                    t,
                    field.values};
}

void write_snapshot(std::ostream& os, const Snapshot& snap) {
    fmt::print(os, "{}\nN {}\nM {}\n", magic, snap.nx, snap.nv);
    fmt::print(os, "x_min {:.17g}\nx_max {:.17g}\nv_min {:.17g}\nv_max {:.17g}\nt {:.17g}\n", snap.x_min, snap.x_max,
               snap.v_min, snap.v_max, snap.t);
    std::string line;
    for (std::size_t n = 0; n < snap.nx; ++n) {
        line.clear();
        for (std::size_t m = 0; m < snap.nv; ++m) {
            if (m) line += ' ';
            fmt::format_to(std::back_inserter(line), "{:.17g}", snap.values(n, m));
        }
        line += '\n';
        os << line;
    }
}

void write_snapshot(const std::filesystem::path& path, const Snapshot& snap) {
    std::ofstream os(path);
    if (!os) throw IoError(fmt::format("cannot open {} for writing", path.string()));
    write_snapshot(os, snap);
    os.flush();
    if (!os) throw IoError(fmt::format("failed writing {}", path.string()));
}

Snapshot read_snapshot(std::istream& is) {
    std::string first;
    if (!std::getline(is, first) || first != magic) throw IoError("snapshot: missing header line");
    Snapshot snap;
    snap.nx = read_keyed<std::size_t>(is, "N");
    snap.nv = read_keyed<std::size_t>(is, "M");
    snap.x_min = read_keyed<double>(is, "x_min");
    snap.x_max = read_keyed<double>(is, "x_max");
    snap.v_min = read_keyed<double>(is, "v_min");
    snap.v_max = read_keyed<double>(is, "v_max");
    snap.t = read_keyed<double>(is, "t");
    snap.values = Matrix(snap.nx, snap.nv);
    std::string token;
    for (double& value : snap.values.flat()) {
        if (!(is >> token)) throw IoError("snapshot: fewer values than N*M");
        value = parse_real(token, "nodal");
    }
    if (is >> token) throw IoError("snapshot: more values than N*M");
    return snap;
}

Snapshot read_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw IoError(fmt::format("cannot open {}", path.string()));
    return read_snapshot(is);
}

} // namespace vpspec
