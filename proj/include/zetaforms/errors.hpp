#pragma once

#include <stdexcept>
#include <string>

namespace zetaforms {

/// Invalid parameters or arguments supplied by a caller.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// A truncated series with zero constant term has no multiplicative inverse.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact check that the mathematics guarantees has failed.  Always an
/// implementation bug, never user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A numerical target could not be certified within the iteration budget.
class PrecisionUnreachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The linear-form residual exceeded its threshold even after escalation.
class ResidualFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nesterenko's criterion requires 0 < alpha < 1 < beta.
class CriterionInapplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A threshold scan ran past its cap without meeting the target.
class ScanCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zetaforms
