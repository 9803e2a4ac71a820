#pragma once

#include <stdexcept>
#include <string>

namespace lscm {

/// Raised when a computation is mathematically well posed but numerically
/// fails, e.g. a rank-deficient compressed system. Invalid inputs raise
/// std::invalid_argument instead.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lscm
