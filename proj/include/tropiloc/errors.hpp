#pragma once

#include <stdexcept>
#include <string>

namespace tropiloc {

/// Operand shapes do not agree (matrix product, vector sums, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument lies outside the domain of an operation, e.g. conjugating a
/// zero vector or residuating against a matrix with a zero column.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An instance document or instance struct violates its invariants.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke a documented precondition that the solver relies on,
/// or a solver postcondition failed to hold.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Requested work exceeds a configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tropiloc
