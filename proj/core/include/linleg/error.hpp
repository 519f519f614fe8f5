#pragma once

#include <stdexcept>
#include <string>

namespace linleg {

// Raised when an input violates a mathematical precondition (non-primitive
// direction, degenerate torus span, mismatched knot types, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace linleg
