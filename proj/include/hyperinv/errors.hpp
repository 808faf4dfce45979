#pragma once

#include <stdexcept>
#include <string>

namespace hyperinv {

/// Raised when an input violates a documented precondition or type invariant.
/// The CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hyperinv
