#pragma once

#include <stdexcept>
#include <string>

namespace ipsim {

inline constexpr const char* kVersion = "0.3.0";

// Process exit codes used by the CLI.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 2,
    kExitDataError = 3,
    kExitNumericError = 4,
};

/// Invalid configuration (bad file, inconsistent options, out-of-range knob).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or missing input data (schema mismatch, missing column, gap).
class DataError : public std::runtime_error {
  public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure (divergence, factorization failure, invalid domain).
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ipsim
