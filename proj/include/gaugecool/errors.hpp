#pragma once

#include <stdexcept>
#include <string>

namespace gaugecool {

/// Raised for malformed arguments: bad quantum numbers, mismatched dimensions,
/// rates outside [0, 1], unparseable design files.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a numerical construction cannot satisfy its own postcondition,
/// e.g. a Casimir eigenvalue that matches no J(J+1).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gaugecool
