#pragma once

#include <stdexcept>
#include <string>

namespace matchcx {

// Thrown when a computation would exceed the configured memory or time budget.
// what() carries a human-readable sizing report.
class ScaleGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace matchcx
