#pragma once

// Scalar types: big rationals for coefficients and machine-word rationals
// for q-exponents.

#include <boost/multiprecision/gmp.hpp>
#include <boost/rational.hpp>

#include <numeric>
#include <string>
#include <string_view>

#include "gieseker/errors.hpp"

// Boost 1.74's mixed rational/integer operator== recurses forever under
// C++20 rewritten comparisons. Exact-match overloads found by ADL take
// precedence over those templates.
namespace boost {
inline bool operator==(const rational<long long>& a, long long b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(const rational<long long>& a, long b) { return a == static_cast<long long>(b); }
inline bool operator==(const rational<long long>& a, int b) { return a == static_cast<long long>(b); }
}  // namespace boost

namespace gieseker {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Exponent of q. Always reduced with positive denominator.
using Exp = boost::rational<long long>;

inline bool is_integer(const Rat& x) {
  return boost::multiprecision::denominator(x) == 1;
}

inline Int numerator_of(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int denominator_of(const Rat& x) { return boost::multiprecision::denominator(x); }

inline std::string to_string(const Rat& x) { return x.str(); }

inline std::string to_string(const Exp& e) {
  if (e.denominator() == 1) return std::to_string(e.numerator());
  return std::to_string(e.numerator()) + "/" + std::to_string(e.denominator());
}

namespace detail {

inline bool is_int_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace detail

/// Parses "a" or "a/b" with decimal integers.
inline Rat parse_rat(std::string_view s) {
  auto slash = s.find('/');
  auto num = s.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!detail::is_int_literal(num) || !detail::is_int_literal(den))
    throw DomainError("not a rational literal: '" + std::string(s) + "'");
  Int d{std::string(den[0] == '+' ? den.substr(1) : den)};
  if (d == 0) throw DomainError("zero denominator in '" + std::string(s) + "'");
  Int n{std::string(num[0] == '+' ? num.substr(1) : num)};
  return Rat(n, d);
}

inline Exp parse_exp(std::string_view s) {
  Rat r = parse_rat(s);
  Int n = numerator_of(r), d = denominator_of(r);
  // Exponents are small; anything that does not fit a long long is malformed.
  if (boost::multiprecision::abs(n) > Int(std::numeric_limits<long long>::max() / 4) ||
      d > Int(std::numeric_limits<long long>::max() / 4))
    throw DomainError("exponent out of range: '" + std::string(s) + "'");
  return Exp(n.convert_to<long long>(), d.convert_to<long long>());
}

inline Rat to_rat(const Exp& e) { return Rat(Int(e.numerator()), Int(e.denominator())); }

inline Int factorial(long n) {
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Binomial coefficient; zero outside 0 <= b <= a.
inline Int binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  Int r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

inline long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

}  // namespace gieseker
