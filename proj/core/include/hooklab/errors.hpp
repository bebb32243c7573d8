#pragma once

#include <stdexcept>
#include <string>

namespace hooklab {

// Argument outside the mathematical domain of an operation (cell outside the
// diagram, non-fundamental discriminant, point outside the upper half-plane).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A precondition on series shape (constant term, q-offset, ...) does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap (partition enumeration size) would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Im(z) is below the configured floor, so the q-series would converge too
// slowly for the requested precision.
class FloorViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

// A division whose denominator is (numerically) zero, e.g. Psi(i) = 0.
class DegeneratePointError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace hooklab
