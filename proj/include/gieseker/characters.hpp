#pragma once

// Graded characters of the finite-dimensional and minimally supported
// modules, their torus expansions, and the q-Catalan family.

#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "gieseker/multipoly.hpp"
#include "gieseker/symfunc.hpp"

namespace gieseker {

/// sum_mu coeffs[mu] [W_r(mu)^*]. Every key has at most r rows.
template <Coefficient C>
struct BasicGLChar {
  int r = 1;
  std::map<Partition, C> coeffs;

  C coeff(const Partition& mu) const {
    auto it = coeffs.find(mu);
    return it == coeffs.end() ? C{} : it->second;
  }
  void set(const Partition& mu, C c) {
    if (mu.num_rows() > r) throw DomainError("GL_r character term with more than r rows");
    if (coef_is_zero(c)) {
      coeffs.erase(mu);
    } else {
      coeffs.insert_or_assign(mu, std::move(c));
    }
  }
  friend bool operator==(const BasicGLChar&, const BasicGLChar&) = default;
};

using GLChar = BasicGLChar<QExpPoly>;
using RationalGLChar = BasicGLChar<QRatFun>;

/// Character of T = C^x x T_0 as a Laurent polynomial in q_1..q_r with
/// coefficients in q.
using TorusChar = BasicMultiPoly<QExpPoly>;
using RationalTorusChar = BasicMultiPoly<QRatFun>;

/// sum_lambda coeffs[lambda] [V_lambda] for S_n.
struct GradedSnChar {
  int n = 0;
  std::map<Partition, QExpPoly> coeffs;
  friend bool operator==(const GradedSnChar&, const GradedSnChar&) = default;
};

struct SymmetryReport {
  bool palindromic = false;
  Exp degree{0};
  Rat leading{0};
};

/// Coefficient of z^m in the generating function D(z). When gcd(m, n) != 1
/// the division by [n]_q may fail, in which case only `rational` is set.
struct GenFunCoeff {
  bool nonintegral = false;
  RationalTorusChar rational;
  std::optional<TorusChar> polynomial;
};

namespace detail {

inline void require_positive(long v, const char* name) {
  if (v < 1) throw DomainError(std::string(name) + " must be positive (got " + std::to_string(v) + ")");
}

inline void require_fd_params(long n, long m, long r) {
  require_positive(n, "n");
  require_positive(r, "r");
  if (m <= 0) throw NonpositiveMError(m);
  if (std::gcd(n, m) != 1) throw NonCoprimeError(n, m);
}

inline QExpPoly one_minus_inverse_q() { return QExpPoly(1L) - QExpPoly::monomial(Exp(-1)); }

}  // namespace detail

/// (1/n) binom(nr + m - 1, m)
inline Rat dim_fd(long n, long m, long r) {
  detail::require_fd_params(n, m, r);
  Rat d(binomial(n * r + m - 1, m), Int(n));
  if (!is_integer(d)) throw IndivisibleError("rank-r Catalan number is not an integer");
  return d;
}

/// (1/[n]_q) sum_{lambda |- m, r(lambda) <= min(n, r)} s_lambda(q^{(1-n)/2}, ..., q^{(n-1)/2}) [W_r(lambda)^*]
inline GLChar char_fd(long n, long m, long r) {
  detail::require_fd_params(n, m, r);
  GLChar out;
  out.r = static_cast<int>(r);
  const QExpPoly qn = qint(n);
  for (const auto& lambda : partitions_of(static_cast<int>(m), static_cast<int>(std::min(n, r))))
    out.set(lambda, exact_div(principal_spec(lambda, static_cast<int>(n)), qn));
  return out;
}

/// Expands each [W_r(mu)^*] as s_mu(q_1^{-1}, ..., q_r^{-1}).
template <Coefficient C>
BasicMultiPoly<C> torus_expand(const BasicGLChar<C>& chi) {
  BasicMultiPoly<C> out(chi.r);
  for (const auto& [mu, c] : chi.coeffs)
    for (const auto& [e, k] : schur_polynomial(mu, chi.r).terms()) {
      Monomial neg = e;
      for (int& x : neg) x = -x;
      out.add_term(neg, c * k);
    }
  return out;
}

inline TorusChar char_fd_torus(long n, long m, long r) { return torus_expand(char_fd(n, m, r)); }

/// Sets every q_i = 1.
inline QExpPoly torus_at_identity(const TorusChar& t) {
  QExpPoly s;
  for (const auto& [e, c] : t.terms()) s += c;
  return s;
}

/// Sets q = 1, leaving the T_0-character.
inline MultiPoly torus_at_q_one(const TorusChar& t) {
  MultiPoly out(t.nvars());
  for (const auto& [e, c] : t.terms()) out.add_term(e, c.eval_at_one());
  return out;
}

/// C^x-character: sum_mu coeffs[mu] dim W_r(mu).
inline QExpPoly graded_dimension(const GLChar& chi) {
  QExpPoly s;
  for (const auto& [mu, c] : chi.coeffs) s += c * Rat(count_ssyt(mu, chi.r));
  return s;
}

inline SymmetryReport symmetry_report(const QExpPoly& p) {
  if (p.is_zero()) throw DomainError("symmetry_report: zero character has no degree");
  return {is_palindromic(p), p.max_exp(), p.leading_coeff()};
}

inline SymmetryReport symmetry_report(const GLChar& chi) { return symmetry_report(graded_dimension(chi)); }

/// Only defined for finite-dimensional characters: every coefficient must be
/// a Laurent polynomial.
inline SymmetryReport symmetry_report(const RationalGLChar& chi) {
  GLChar poly;
  poly.r = chi.r;
  for (const auto& [mu, c] : chi.coeffs) {
    if (!c.is_polynomial()) throw DomainError("symmetry_report: coefficient of (" + mu.to_string() + ") is not a Laurent polynomial");
    poly.set(mu, c.as_polynomial());
  }
  return symmetry_report(poly);
}

/// Coefficient of z^m in
///   D(z) = (1/[n]_q) prod_{i <= n, j <= r} 1 / (1 - z q^{(n+1-2i)/2} q_j^{-1}),
/// by truncated power-series multiplication followed by division by [n]_q.
inline GenFunCoeff gen_function_coeff(long n, long r, long m) {
  detail::require_positive(n, "n");
  detail::require_positive(r, "r");
  if (m < 0) throw DomainError("gen_function_coeff: m must be nonnegative");
  const int rr = static_cast<int>(r);
  std::vector<TorusChar> series(static_cast<std::size_t>(m + 1), TorusChar(rr));
  series[0] = TorusChar::constant(rr, QExpPoly(1L));
  for (long i = 1; i <= n; ++i) {
    const Exp qe(n + 1 - 2 * i, 2);
    for (int j = 0; j < rr; ++j) {
      // S <- S / (1 - a z) with a = q^{qe} q_j^{-1}
      for (std::size_t k = 1; k < series.size(); ++k) {
        TorusChar shifted(rr);
        for (const auto& [e0, c] : series[k - 1].terms()) {
          Monomial e = e0;
          e[static_cast<std::size_t>(j)] -= 1;
          shifted.add_term(e, c.shifted(qe));
        }
        series[k] += shifted;
      }
    }
  }
  const QExpPoly qn = qint(n);
  GenFunCoeff out;
  out.rational = RationalTorusChar(rr);
  TorusChar poly(rr);
  for (const auto& [e, c] : series.back().terms()) {
    QExpPoly quo;
    if (try_exact_div(c, qn, quo)) {
      poly.add_term(e, quo);
      out.rational.add_term(e, QRatFun(quo));
    } else {
      out.nonintegral = true;
      out.rational.add_term(e, QRatFun(c, qn));
    }
  }
  if (!out.nonintegral) out.polynomial = std::move(poly);
  return out;
}

/// Graded S_n-decomposition (1/[m]_q) sum_{lambda |- n} s_lambda(q^{(1-m)/2}, ...) [V_lambda].
inline GradedSnChar char_cherednik_fd(long n, long m) {
  detail::require_fd_params(n, m, 1);
  GradedSnChar out;
  out.n = static_cast<int>(n);
  const QExpPoly qm = qint(m);
  for (const auto& lambda : partitions_of(static_cast<int>(n))) {
    auto c = exact_div(principal_spec(lambda, static_cast<int>(m)), qm);
    if (!c.is_zero()) out.coeffs.emplace(lambda, std::move(c));
  }
  return out;
}

/// C^d(q) = ([d]_q / [nd]_q) qbinom(nr + m - 1, m).
inline QExpPoly chd_closed(long n, long m, long r, long d) {
  detail::require_fd_params(n, m, r);
  if (d < 1 || r % d != 0) throw DomainError("d must be a positive divisor of r (got d=" + std::to_string(d) + ", r=" + std::to_string(r) + ")");
  return exact_div(qint(d) * qbinom(n * r + m - 1, m), qint(n * d));
}

/// Tr(q^h N_d) obtained by substituting the N_d eigenvalues into the torus
/// character. Expressed in the variable q^{1/d}, i.e. every exponent is
/// multiplied by d, so that it is directly comparable with chd_closed.
inline QExpPoly chd_substitute(long n, long m, long r, long d) {
  detail::require_fd_params(n, m, r);
  if (d < 1 || r % d != 0) throw DomainError("d must be a positive divisor of r (got d=" + std::to_string(d) + ", r=" + std::to_string(r) + ")");
  const long k = r / d;
  // Exponent of q_j in the variable q^{1/d}.
  std::vector<Exp> x;
  for (long l = 1; l <= k; ++l)
    for (long s = 1; s <= d; ++s) x.emplace_back(d * n * (k + 1 - 2 * l) + d + 1 - 2 * s, 2);
  const TorusChar t = char_fd_torus(n, m, r);
  QExpPoly out;
  for (const auto& [e, c] : t.terms()) {
    Exp shift(0);
    for (std::size_t j = 0; j < e.size(); ++j) shift += Exp(e[j]) * x[j];
    out += c.exponents_scaled(Exp(d)).shifted(shift);
  }
  return out;
}

/// q^{-(m-1)/2 + (n/m) kappa(beta)}
inline Exp standard_weight(const Partition& beta, long n) {
  const long m = beta.size();
  return Exp(-(m - 1), 2) + Exp(n * beta.kappa(), m);
}

/// Graded Frobenius character of the standard module with highest weight
/// beta: (1 - q^{-1}) q^{standard_weight} s_beta[X / (1 - q^{-1})], Schur basis.
inline SymFunc<QRatFun> char_standard(const Partition& beta, long n, long m) {
  if (beta.size() != m) throw DomainError("char_standard: |beta| must equal m");
  detail::require_positive(n, "n");
  const QRatFun pref(detail::one_minus_inverse_q().shifted(standard_weight(beta, n)));
  const auto sub = powersum_to_schur(substitute_geometric(SymFunc<Rat>::schur(beta)));
  return sub.scaled(pref);
}

namespace detail {

inline void require_minsupp_label(const Partition& lambda, long n, long m) {
  require_positive(n, "n");
  if (m <= 0) throw NonpositiveMError(m);
  const long d = std::gcd(n, m);
  if (lambda.size() != d)
    throw DomainError("|lambda| must equal gcd(m, n) = " + std::to_string(d) + " (got |lambda| = " + std::to_string(lambda.size()) + ")");
}

}  // namespace detail

/// sum_beta c^beta_{lambda, m0} char_standard(beta)
inline SymFunc<QRatFun> char_S_module(const Partition& lambda, long n, long m) {
  detail::require_minsupp_label(lambda, n, m);
  const long m0 = m / std::gcd(n, m);
  SymFunc<QRatFun> out(Basis::schur, static_cast<int>(m));
  for (const auto& [beta, c] : plethysm_coeffs(lambda, static_cast<int>(m0))) out += char_standard(beta, n, m).scaled(Rat(c));
  return out;
}

/// q-graded GL_r-character of the minimally supported module labelled by
/// n0*lambda:
///   (1 - q^{-1}) sum_{mu, beta |- m, r(mu) <= min(n, r)} c^beta q^{standard_weight(beta)}
///       <s_beta[X / (1 - q^{-1})], s_mu> [W_r(mu)^*]
inline RationalGLChar char_minsupp(long n, long m, long r, const Partition& lambda) {
  detail::require_minsupp_label(lambda, n, m);
  detail::require_positive(r, "r");
  const long m0 = m / std::gcd(n, m);
  const auto c = plethysm_coeffs(lambda, static_cast<int>(m0));
  const QRatFun outer(detail::one_minus_inverse_q());
  RationalGLChar out;
  out.r = static_cast<int>(r);
  for (const auto& mu : partitions_of(static_cast<int>(m), static_cast<int>(std::min(n, r)))) {
    QRatFun acc;
    for (const auto& [beta, cb] : c)
      acc += QRatFun(QExpPoly::monomial(standard_weight(beta, n), Rat(cb))) * pleth_sub_coeff(beta, mu);
    out.set(mu, outer * acc);
  }
  return out;
}

/// Checks that m -> (1/n) binom(nr + m - 1, m), as a polynomial of degree
/// nr - 1 in m, vanishes exactly at m = -1, ..., -(nr - 1). The polynomial is
/// recovered by Lagrange interpolation from its values at m = 0..nr-1.
inline bool dim_poly_roots_check(long n, long r) {
  detail::require_positive(n, "n");
  detail::require_positive(r, "r");
  const long deg = n * r - 1;
  std::vector<Rat> values;
  for (long k = 0; k <= deg; ++k) values.emplace_back(binomial(n * r + k - 1, k), Int(n));
  auto eval = [&](long x) {
    Rat s = 0;
    for (long k = 0; k <= deg; ++k) {
      Rat w = values[static_cast<std::size_t>(k)];
      for (long j = 0; j <= deg; ++j)
        if (j != k) w *= Rat(x - j) / Rat(k - j);
      s += w;
    }
    return s;
  };
  // The interpolant must agree with the closed form past the sample points.
  if (eval(deg + 1) != Rat(binomial(n * r + deg, deg + 1), Int(n))) return false;
  if (eval(-n * r) == 0) return false;
  for (long x = -1; x >= -deg; --x)
    if (eval(x) != 0) return false;
  return eval(0) != 0;
}

}  // namespace gieseker
