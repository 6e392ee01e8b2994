#pragma once

#include <stdexcept>
#include <string>

namespace gatesynth {

/// Invalid configuration or malformed input file. CLI exit code 1.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure: broken precondition, non-convergence, bad matrix data.
/// CLI exit code 2.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured resource limit would be exceeded. CLI exit code 3.
struct LimitError : std::runtime_error {
  explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gatesynth
