#pragma once

#include <stdexcept>
#include <string>

namespace meco {

/// Scenario violates the feasibility condition (sum of forced offload
/// cycles exceeds the cloud capacity).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// A bisection failed to bracket or converge, or a constructed solution
/// failed its residual guard.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace meco
