#pragma once

#include <stdexcept>
#include <string>

namespace ibound {

// Raised when an input exceeds an enumeration or solver budget.  Callers that
// promise "never a wrong answer" translate this into an explicit UNKNOWN or a
// distinct exit code instead of guessing.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ibound
