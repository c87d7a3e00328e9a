#pragma once

#include <stdexcept>
#include <string>

namespace csl {

/// Input is well-formed but violates a mathematical precondition
/// (degenerate lattice, zero vector, non-orthogonal matrix, singular basis).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller misuse: malformed text, non-coprime parameters, zero bounds.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact identity that must hold on valid inputs did not. Never expected
/// to fire; reaching it means a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace csl
