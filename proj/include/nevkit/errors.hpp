#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nevkit {

/// Malformed input: bad parameters, points outside the disk, duplicate nodes.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition or property failed. `witness` holds the
/// indices (into the caller's point list) that exhibit the failure.
class PropertyViolation : public std::runtime_error {
 public:
  PropertyViolation(const std::string& what, std::vector<std::size_t> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

/// Tuple enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nevkit
