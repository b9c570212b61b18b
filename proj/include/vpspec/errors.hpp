#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vpspec {

/// Invalid user-supplied configuration (maps to CLI exit status 1).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical breakdown: non-finite values, neutrality violation, strict CFL.
/// Maps to CLI exit status 2.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what, std::int64_t step = -1)
        : std::runtime_error(what), step_(step) {}

    /// Step index at which the failure was detected, or -1 if not tied to a step.
    std::int64_t step() const noexcept { return step_; }

private:
    std::int64_t step_;
};

/// File system failures (maps to CLI exit status 3).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace vpspec
