#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gieseker/rational.hpp"

namespace gieseker {

/// Laurent polynomial in q with rational exponents and rational
/// coefficients. Canonical: no zero coefficient is ever stored, so two
/// values are equal iff their term maps are equal.
class QExpPoly {
public:
  using Terms = std::map<Exp, Rat>;

  QExpPoly() = default;
  explicit QExpPoly(const Rat& c) {
    if (c != 0) terms_.emplace(Exp(0), c);
  }
  explicit QExpPoly(long c) : QExpPoly(Rat(c)) {}

  static QExpPoly monomial(Exp e, const Rat& c = Rat(1)) {
    QExpPoly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }
  static QExpPoly q() { return monomial(Exp(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Exp min_exp() const { return terms_.begin()->first; }
  Exp max_exp() const { return terms_.rbegin()->first; }
  const Rat& leading_coeff() const { return terms_.rbegin()->second; }

  Rat coeff(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  /// Adds c*q^e in place.
  void add_term(Exp e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// True iff every exponent and coefficient is an integer.
  bool has_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
      if (!is_integer(c)) return false;
    return true;
  }
  bool has_nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  Rat eval_at_one() const {
    Rat s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  /// q -> q^{-1}
  QExpPoly inverted() const {
    QExpPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  /// q -> q^k for a nonzero rational k.
  QExpPoly exponents_scaled(Exp k) const {
    if (k == Exp(0)) throw DomainError("exponent scale must be nonzero");
    QExpPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e * k, c);
    return r;
  }

  /// Multiplies by q^s.
  QExpPoly shifted(Exp s) const {
    QExpPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
    return r;
  }

  QExpPoly& operator+=(const QExpPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  QExpPoly& operator-=(const QExpPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  QExpPoly& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend QExpPoly operator+(QExpPoly a, const QExpPoly& b) { return a += b; }
  friend QExpPoly operator-(QExpPoly a, const QExpPoly& b) { return a -= b; }
  friend QExpPoly operator-(QExpPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend QExpPoly operator*(QExpPoly a, const Rat& s) { return a *= s; }
  friend QExpPoly operator*(const Rat& s, QExpPoly a) { return a *= s; }

  friend QExpPoly operator*(const QExpPoly& a, const QExpPoly& b) {
    QExpPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  QExpPoly& operator*=(const QExpPoly& o) { return *this = *this * o; }

  friend bool operator==(const QExpPoly&, const QExpPoly&) = default;

  QExpPoly pow(unsigned k) const {
    QExpPoly r(1L), base = *this;
    while (k) {
      if (k & 1U) r *= base;
      base *= base;
      k >>= 1U;
    }
    return r;
  }

  /// Smallest L such that all exponent differences lie in (1/L)Z.
  long long lattice() const {
    long long l = 1;
    if (terms_.empty()) return l;
    Exp e0 = min_exp();
    for (const auto& [e, c] : terms_) l = lcm_ll(l, (e - e0).denominator());
    return l;
  }

private:
  Terms terms_;
};

inline bool is_zero(const QExpPoly& p) { return p.is_zero(); }

/// q -> q^{-1} fixes p.
inline bool is_palindromic(const QExpPoly& p) { return p.inverted() == p; }

namespace detail {

/// Dense univariate polynomial over Q, coefficient i of x^i, no trailing zeros.
struct Dense {
  std::vector<Rat> c;

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  const Rat& lead() const { return c.back(); }
};

inline Dense mul(const Dense& a, const Dense& b) {
  if (a.zero() || b.zero()) return {};
  Dense r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

/// Euclidean division a = q*b + r with deg r < deg b.
inline std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  if (b.zero()) throw DomainError("polynomial division by zero");
  Dense q;
  if (a.degree() < b.degree()) return {q, a};
  q.c.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rat(0));
  const Rat inv_lead = 1 / b.lead();
  while (!a.zero() && a.degree() >= b.degree()) {
    long shift = a.degree() - b.degree();
    Rat f = a.lead() * inv_lead;
    q.c[static_cast<std::size_t>(shift)] = f;
    for (std::size_t j = 0; j < b.c.size(); ++j) a.c[j + static_cast<std::size_t>(shift)] -= f * b.c[j];
    a.trim();
  }
  q.trim();
  return {q, a};
}

inline Dense monic(Dense a) {
  if (a.zero()) return a;
  Rat inv = 1 / a.lead();
  for (auto& x : a.c) x *= inv;
  return a;
}

inline Dense gcd(Dense a, Dense b) {
  while (!b.zero()) {
    auto r = divmod(std::move(a), b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

/// Writes p = q^{base} * D(q^{1/L}); requires every exponent difference
/// from base to lie in (1/L)Z and be nonnegative.
inline Dense to_dense(const QExpPoly& p, Exp base, long long L) {
  Dense d;
  for (const auto& [e, c] : p.terms()) {
    Exp k = (e - base) * Exp(L);
    if (k.denominator() != 1 || k.numerator() < 0) throw std::logic_error("to_dense: exponent off lattice");
    auto idx = static_cast<std::size_t>(k.numerator());
    if (d.c.size() <= idx) d.c.resize(idx + 1, Rat(0));
    d.c[idx] = c;
  }
  d.trim();
  return d;
}

inline QExpPoly from_dense(const Dense& d, Exp base, long long L) {
  QExpPoly p;
  for (std::size_t i = 0; i < d.c.size(); ++i)
    if (d.c[i] != 0) p.add_term(base + Exp(static_cast<long long>(i), L), d.c[i]);
  return p;
}

/// Lattice shared by the shifted forms of both polynomials.
inline long long common_lattice(const QExpPoly& a, const QExpPoly& b) {
  return lcm_ll(a.lattice(), b.lattice());
}

}  // namespace detail

/// Returns p / d when the division is exact; throws IndivisibleError
/// otherwise.
inline QExpPoly exact_div(const QExpPoly& p, const QExpPoly& d) {
  if (d.is_zero()) throw DomainError("exact_div: division by zero");
  if (p.is_zero()) return {};
  const Exp ep = p.min_exp(), ed = d.min_exp();
  const long long L = detail::common_lattice(p, d);
  auto [quo, rem] = detail::divmod(detail::to_dense(p, ep, L), detail::to_dense(d, ed, L));
  if (!rem.zero()) throw IndivisibleError("exact_div: nonzero remainder");
  return detail::from_dense(quo, ep - ed, L);
}

/// Like exact_div but reports failure instead of throwing.
inline bool try_exact_div(const QExpPoly& p, const QExpPoly& d, QExpPoly& out) {
  if (d.is_zero()) throw DomainError("try_exact_div: division by zero");
  if (p.is_zero()) {
    out = {};
    return true;
  }
  const Exp ep = p.min_exp(), ed = d.min_exp();
  const long long L = detail::common_lattice(p, d);
  auto [quo, rem] = detail::divmod(detail::to_dense(p, ep, L), detail::to_dense(d, ed, L));
  if (!rem.zero()) return false;
  out = detail::from_dense(quo, ep - ed, L);
  return true;
}

}  // namespace gieseker
