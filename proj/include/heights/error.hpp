#pragma once

#include <stdexcept>
#include <string>

namespace heights {

/// Raised when an input violates a mathematical precondition or a type
/// invariant. `field` names the offending input field when there is one.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& message, std::string field = {})
      : std::runtime_error(message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Internal consistency failure: an identity that must hold did not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace heights
