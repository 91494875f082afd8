#pragma once

#include <stdexcept>
#include <string>

namespace wboost {

/// Raised when caller-supplied data violates a precondition
/// (off-shell momentum, non-positive mass, malformed scenario, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal consistency check exceeds its tolerance.
/// Usually means the inputs were mutually inconsistent.
class ToleranceError : public std::runtime_error {
 public:
  explicit ToleranceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wboost
