#pragma once

#include "gieseker/qpoly.hpp"

namespace gieseker {

/// Reduced quotient num/den of two QExpPoly values.
///
/// Canonical form: both parts are cleared to a common exponent lattice
/// q^{1/L} (after factoring out their lowest monomials), the polynomial gcd
/// in q^{1/L} is divided out, and the denominator is scaled so that its
/// lowest term is exactly 1 = 1*q^0. The leftover monomial goes into the
/// numerator. Under this normalization equality is structural.
class QRatFun {
public:
  QRatFun() : den_(1L) {}
  explicit QRatFun(const Rat& c) : num_(c), den_(1L) {}
  explicit QRatFun(long c) : QRatFun(Rat(c)) {}
  explicit QRatFun(QExpPoly p) : num_(std::move(p)), den_(1L) {}
  QRatFun(QExpPoly num, QExpPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const QExpPoly& num() const { return num_; }
  const QExpPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True iff the value is a Laurent polynomial (denominator is 1).
  bool is_polynomial() const { return den_ == QExpPoly(1L); }

  const QExpPoly& as_polynomial() const {
    if (!is_polynomial()) throw DomainError("rational function is not a Laurent polynomial");
    return num_;
  }

  friend QRatFun operator+(const QRatFun& a, const QRatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return QRatFun(a.num_ + b.num_, a.den_);
    return QRatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend QRatFun operator-(const QRatFun& a) {
    QRatFun r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend QRatFun operator-(const QRatFun& a, const QRatFun& b) { return a + (-b); }
  friend QRatFun operator*(const QRatFun& a, const QRatFun& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return QRatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend QRatFun operator*(const QRatFun& a, const Rat& s) {
    QRatFun r = a;
    r.num_ *= s;
    return r;
  }
  friend QRatFun operator*(const Rat& s, const QRatFun& a) { return a * s; }
  friend QRatFun operator/(const QRatFun& a, const QRatFun& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return QRatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  QRatFun& operator+=(const QRatFun& o) { return *this = *this + o; }
  QRatFun& operator-=(const QRatFun& o) { return *this = *this - o; }
  QRatFun& operator*=(const QRatFun& o) { return *this = *this * o; }
  QRatFun& operator*=(const Rat& s) { return *this = *this * s; }

  friend bool operator==(const QRatFun&, const QRatFun&) = default;

  /// q -> q^{-1}
  QRatFun inverted() const { return QRatFun(num_.inverted(), den_.inverted()); }

  /// Laurent expansion around q = infinity, i.e. as a series in q^{-1}.
  /// Returns every term with exponent >= lowest_exp.
  QExpPoly expand_in_inverse_q(Exp lowest_exp) const {
    if (num_.is_zero()) return {};
    // den = lead * q^{top} * (1 + lower terms); expand 1/(1 + u) in the
    // lattice variable y = q^{-1/L}.
    const Exp top = den_.max_exp();
    const long long L = lcm_ll(lcm_ll(den_.lattice(), num_.lattice()),
                               lcm_ll((num_.max_exp() - top).denominator(), lowest_exp.denominator()));
    const Exp num_top = num_.max_exp() - top;
    if (lowest_exp > num_top) return {};
    auto steps = [L](Exp hi, Exp lo) { return static_cast<std::size_t>(((hi - lo) * Exp(L)).numerator()); };
    const std::size_t N = steps(num_top, lowest_exp);  // highest index kept
    std::vector<Rat> d(steps(top, den_.min_exp()) + 1, Rat(0));
    for (const auto& [e, c] : den_.terms()) d[steps(top, e)] = c;
    std::vector<Rat> a(N + 1, Rat(0));
    for (const auto& [e, c] : num_.terms()) {
      std::size_t k = steps(num_top + top, e);
      if (k <= N) a[k] = c;
    }
    // Solve d * s = a as power series in y.
    std::vector<Rat> s(N + 1, Rat(0));
    const Rat inv = 1 / d[0];
    for (std::size_t k = 0; k <= N; ++k) {
      Rat acc = a[k];
      for (std::size_t j = 1; j < d.size() && j <= k; ++j) acc -= d[j] * s[k - j];
      s[k] = acc * inv;
    }
    QExpPoly out;
    for (std::size_t k = 0; k <= N; ++k)
      if (s[k] != 0) out.add_term(num_top - Exp(static_cast<long long>(k), L), s[k]);
    return out;
  }

private:
  void normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = QExpPoly(1L);
      return;
    }
    const Exp en = num_.min_exp(), ed = den_.min_exp();
    const long long L = detail::common_lattice(num_, den_);
    auto n = detail::to_dense(num_, en, L);
    auto d = detail::to_dense(den_, ed, L);
    if (d.degree() > 0 && n.degree() > 0) {
      auto g = detail::gcd(n, d);
      if (g.degree() > 0) {
        n = detail::divmod(std::move(n), g).first;
        d = detail::divmod(std::move(d), g).first;
      }
    }
    const Rat inv = 1 / d.c[0];
    for (auto& x : n.c) x *= inv;
    for (auto& x : d.c) x *= inv;
    num_ = detail::from_dense(n, en - ed, L);
    den_ = detail::from_dense(d, Exp(0), L);
  }

  QExpPoly num_;
  QExpPoly den_;
};

inline bool is_zero(const QRatFun& f) { return f.is_zero(); }

inline QRatFun ratfun_normalize(QExpPoly num, QExpPoly den) { return QRatFun(std::move(num), std::move(den)); }

}  // namespace gieseker
