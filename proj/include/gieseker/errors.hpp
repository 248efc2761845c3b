#pragma once

#include <stdexcept>
#include <string>

namespace gieseker {

/// Malformed input: a precondition on the arguments does not hold.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when c = m/n is not in lowest terms, so no finite-dimensional
/// module exists.
class NonCoprimeError : public DomainError {
public:
  NonCoprimeError(long n, long m)
      : DomainError("gcd(m, n) must be 1 (got n=" + std::to_string(n) +
                    ", m=" + std::to_string(m) +
                    "); a finite-dimensional representation exists only for coprime m and n") {}
};

class NonpositiveMError : public DomainError {
public:
  explicit NonpositiveMError(long m)
      : DomainError("m must be positive (got m=" + std::to_string(m) + ")") {}
};

/// A division that the mathematics says is exact left a remainder.
/// This is never a user error: it means a formula or implementation bug.
class IndivisibleError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace gieseker
