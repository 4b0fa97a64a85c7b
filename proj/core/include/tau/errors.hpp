#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tau {

// Invalid argument for a mathematical operation (limit = 0, log of a
// non-positive number, degenerate discriminant, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A request would exceed a configured resource ceiling.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed result contradicts a proven identity. Seeing one of these
// means the implementation (or the input data) is wrong.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class MissingPrime : public DomainError {
 public:
  explicit MissingPrime(unsigned long p)
      : DomainError("no tau value supplied for prime " + std::to_string(p)),
        prime_(p) {}
  unsigned long prime() const noexcept { return prime_; }

 private:
  unsigned long prime_;
};

}  // namespace tau
