#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "gieseker/coeff.hpp"
#include "gieseker/tableaux.hpp"

namespace gieseker {

/// Exponent vector of a monomial x_1^{e_1} ... x_r^{e_r}.
using Monomial = std::vector<int>;

/// Laurent polynomial in finitely many commuting variables with integer
/// exponents, generic over the coefficient ring.
template <Coefficient C>
class BasicMultiPoly {
public:
  using Terms = std::map<Monomial, C>;

  BasicMultiPoly() = default;
  explicit BasicMultiPoly(int nvars) : nvars_(nvars) {}

  static BasicMultiPoly constant(int nvars, C c) {
    BasicMultiPoly p(nvars);
    p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), std::move(c));
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& e, const C& c) {
    if (static_cast<int>(e.size()) != nvars_) throw DomainError("monomial has wrong number of variables");
    if (coef_is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (coef_is_zero(it->second)) terms_.erase(it);
    }
  }

  C coeff(const Monomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C{} : it->second;
  }

  BasicMultiPoly& operator+=(const BasicMultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicMultiPoly& operator-=(const BasicMultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend BasicMultiPoly operator+(BasicMultiPoly a, const BasicMultiPoly& b) { return a += b; }
  friend BasicMultiPoly operator-(BasicMultiPoly a, const BasicMultiPoly& b) { return a -= b; }

  friend BasicMultiPoly operator*(const BasicMultiPoly& a, const BasicMultiPoly& b) {
    a.check_compatible(b);
    BasicMultiPoly r(a.nvars_);
    Monomial e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  template <class S>
  BasicMultiPoly scaled(const S& s) const {
    BasicMultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }

  friend bool operator==(const BasicMultiPoly&, const BasicMultiPoly&) = default;

  /// x_i -> x_i^k for every variable.
  BasicMultiPoly powers_substituted(int k) const {
    BasicMultiPoly r(nvars_);
    for (const auto& [e0, c] : terms_) {
      Monomial e = e0;
      for (int& x : e) x *= k;
      r.add_term(e, c);
    }
    return r;
  }

  /// x_i -> x_i^{-1}
  BasicMultiPoly inverted() const { return powers_substituted(-1); }

  /// Invariance under every adjacent transposition of variables.
  bool is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i) {
      for (const auto& [e, c] : terms_) {
        Monomial s = e;
        std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)]);
        auto it = terms_.find(s);
        if (it == terms_.end() || !(it->second == c)) return false;
      }
    }
    return true;
  }

private:
  void check_compatible(const BasicMultiPoly& o) const {
    if (o.nvars_ != nvars_) throw DomainError("polynomials in different numbers of variables");
  }

  int nvars_ = 0;
  Terms terms_;
};

using MultiPoly = BasicMultiPoly<Rat>;

/// Schur polynomial s_mu(x_1..x_r) as a sum over semistandard tableaux.
/// Results are memoized; the cache is mutex-guarded.
inline const MultiPoly& schur_polynomial(const Partition& mu, int r) {
  static std::mutex mtx;
  static std::map<std::pair<Partition, int>, MultiPoly> cache;
  {
    std::lock_guard lock(mtx);
    auto it = cache.find({mu, r});
    if (it != cache.end()) return it->second;
  }
  MultiPoly p(r);
  Monomial e(static_cast<std::size_t>(r));
  for_each_ssyt(mu, r, [&](const Tableau& t) {
    std::fill(e.begin(), e.end(), 0);
    for (const auto& row : t)
      for (int v : row) ++e[static_cast<std::size_t>(v - 1)];
    p.add_term(e, Rat(1));
  });
  std::lock_guard lock(mtx);
  return cache.emplace(std::pair{mu, r}, std::move(p)).first->second;
}

/// Complete homogeneous polynomial h_a(x_1..x_r).
inline MultiPoly complete_homog_poly(int a, int r) {
  return a == 0 ? MultiPoly::constant(r, Rat(1)) : schur_polynomial(Partition{a}, r);
}

/// Elementary symmetric polynomial e_a(x_1..x_r).
inline MultiPoly elementary_poly(int a, int r) {
  if (a > r) return MultiPoly(r);
  return a == 0 ? MultiPoly::constant(r, Rat(1)) : schur_polynomial(Partition::rectangle(1, a), r);
}

}  // namespace gieseker
