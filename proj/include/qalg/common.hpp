#pragma once

#include <stdexcept>
#include <string>

namespace qalg {

/// Operands of incompatible size (group degree, word length, matrix shape).
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Bad or incomplete configuration: malformed parameter files, missing
/// q-entries, non-prime moduli, out-of-range subcommand arguments.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qalg
