#pragma once

#include <stdexcept>
#include <string>

namespace twistrep {

/// Raised when user-supplied data (files, flags, tables) fails to parse or
/// violates a structural precondition. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a numeric routine cannot reach its contract (e.g. eigenvalue
/// clustering stays ambiguous after the retry budget).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace twistrep
