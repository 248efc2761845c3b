#pragma once

#include "gieseker/qpoly.hpp"

namespace gieseker {

/// Balanced q-integer [n]_q = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}).
inline QExpPoly qint(long n) {
  if (n <= 0) throw DomainError("qint: n must be positive (got " + std::to_string(n) + ")");
  QExpPoly p;
  for (long k = 0; k < n; ++k) p.add_term(Exp(1 - n + 2 * k, 2), Rat(1));
  return p;
}

inline QExpPoly qfactorial(long n) {
  if (n < 0) throw DomainError("qfactorial: n must be nonnegative");
  QExpPoly f(1L);
  for (long k = 2; k <= n; ++k) f *= qint(k);
  return f;
}

/// Balanced Gaussian binomial; palindromic in q <-> q^{-1}.
inline QExpPoly qbinom(long a, long b) {
  if (a < 0 || b < 0) throw DomainError("qbinom: arguments must be nonnegative");
  if (b > a) throw DomainError("qbinom: need b <= a (got a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
  return exact_div(qfactorial(a), qfactorial(b) * qfactorial(a - b));
}

}  // namespace gieseker
