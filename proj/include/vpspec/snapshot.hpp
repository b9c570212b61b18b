#pragma once

#include "vpspec/dense.hpp"
#include "vpspec/phase_space.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>

namespace vpspec {

/// Nodal distribution at one time level, as stored on disk.
struct Snapshot {
    std::size_t nx = 0;
    std::size_t nv = 0;
    double x_min = 0.0;
    double x_max = 0.0;
    double v_min = 0.0;
    double v_max = 0.0;
    double t = 0.0;
    Matrix values; ///< nx × nv, n-major
};

Snapshot make_snapshot(const DistributionField& field, double t);

/// Text header (N, M, domain endpoints, t) and one row of M values per line,
/// all reals with 17 significant digits.
void write_snapshot(std::ostream& os, const Snapshot& snap);
void write_snapshot(const std::filesystem::path& path, const Snapshot& snap);

/// Throws IoError when the file cannot be read or is malformed.
Snapshot read_snapshot(std::istream& is);
Snapshot read_snapshot(const std::filesystem::path& path);

} // namespace vpspec
