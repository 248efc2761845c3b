#pragma once

// Symmetric functions in Schur and power-sum coordinates. Every basis change
// routes through power sums using Murnaghan-Nakayama character values.

#include <map>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "gieseker/coeff.hpp"
#include "gieseker/multipoly.hpp"
#include "gieseker/partitions.hpp"
#include "gieseker/qnumbers.hpp"
#include "gieseker/tableaux.hpp"

namespace gieseker {

namespace detail {

inline std::vector<int> beta_set(const Partition& lambda) {
  const int l = lambda.num_rows();
  std::vector<int> b(static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i) b[static_cast<std::size_t>(i - 1)] = lambda.row(i) + l - i;
  return b;
}

inline Partition from_beta_set(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  const int l = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 1; i <= l; ++i) {
    int p = b[static_cast<std::size_t>(i - 1)] - (l - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

}  // namespace detail

/// Irreducible character chi^lambda evaluated on the class of cycle type rho,
/// by border-strip removal on beta-sets. Memoized behind a mutex.
inline long long mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    throw DomainError("mn_character: |lambda| = " + std::to_string(lambda.size()) +
                      " but |rho| = " + std::to_string(rho.size()));
  if (rho.empty()) return 1;

  static std::mutex mtx;
  static std::map<std::pair<Partition, Partition>, long long> memo;
  {
    std::lock_guard lock(mtx);
    auto it = memo.find({lambda, rho});
    if (it != memo.end()) return it->second;
  }

  const int k = rho.parts().front();
  const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  const auto beta = detail::beta_set(lambda);
  const std::set<int> present(beta.begin(), beta.end());
  long long value = 0;
  for (std::size_t idx = 0; idx < beta.size(); ++idx) {
    const int b = beta[idx];
    const int target = b - k;
    if (target < 0 || present.count(target)) continue;
    int between = 0;
    for (int c : beta)
      if (c > target && c < b) ++between;
    auto nb = beta;
    nb[idx] = target;
    const long long sub = mn_character(detail::from_beta_set(std::move(nb)), rest);
    value += (between % 2 == 0 ? 1 : -1) * sub;
  }

  std::lock_guard lock(mtx);
  memo.emplace(std::pair{lambda, rho}, value);
  return value;
}

enum class Basis { schur, powersum };

inline const char* basis_name(Basis b) { return b == Basis::schur ? "schur" : "powersum"; }

/// Homogeneous symmetric function of a fixed degree in one basis.
template <Coefficient C>
class SymFunc {
public:
  using Terms = std::map<Partition, C>;

  SymFunc() = default;
  SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {}

  static SymFunc single(Basis basis, const Partition& p, C c) {
    SymFunc f(basis, p.size());
    f.add_term(p, std::move(c));
    return f;
  }
  static SymFunc schur(const Partition& p) { return single(Basis::schur, p, coef_from<C>(Rat(1))); }
  static SymFunc powersum(const Partition& p) { return single(Basis::powersum, p, coef_from<C>(Rat(1))); }

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? C{} : it->second;
  }

  void add_term(const Partition& p, const C& c) {
    if (p.size() != degree_)
      throw DomainError("term of degree " + std::to_string(p.size()) + " added to a degree-" + std::to_string(degree_) +
                        " symmetric function");
    if (coef_is_zero(c)) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(p, c);
    } else {
      it->second += c;
      if (coef_is_zero(it->second)) terms_.erase(it);
    }
  }

  SymFunc& operator+=(const SymFunc& o) {
    if (o.basis_ != basis_ || o.degree_ != degree_) throw DomainError("adding symmetric functions of different basis or degree");
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }

  template <class S>
  SymFunc scaled(const S& s) const {
    SymFunc r(basis_, degree_);
    for (const auto& [p, c] : terms_) r.add_term(p, c * s);
    return r;
  }

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
  Basis basis_ = Basis::schur;
  int degree_ = 0;
  Terms terms_;
};

/// s_lambda = sum_rho chi^lambda_rho / z_rho p_rho
template <Coefficient C>
SymFunc<C> schur_to_powersum(const SymFunc<C>& f) {
  if (f.basis() == Basis::powersum) return f;
  SymFunc<C> out(Basis::powersum, f.degree());
  const auto rhos = partitions_of(f.degree());
  for (const auto& [lambda, c] : f.terms())
    for (const auto& rho : rhos) {
      long long chi = mn_character(lambda, rho);
      if (chi != 0) out.add_term(rho, c * Rat(Int(chi), rho.z_class()));
    }
  return out;
}

/// p_rho = sum_lambda chi^lambda_rho s_lambda
template <Coefficient C>
SymFunc<C> powersum_to_schur(const SymFunc<C>& f) {
  if (f.basis() == Basis::schur) return f;
  SymFunc<C> out(Basis::schur, f.degree());
  const auto lambdas = partitions_of(f.degree());
  for (const auto& [rho, c] : f.terms())
    for (const auto& lambda : lambdas) {
      long long chi = mn_character(lambda, rho);
      if (chi != 0) out.add_term(lambda, c * Rat(chi));
    }
  return out;
}

template <Coefficient C>
SymFunc<C> in_basis(const SymFunc<C>& f, Basis b) {
  return b == Basis::schur ? powersum_to_schur(f) : schur_to_powersum(f);
}

/// Hall inner product; <p_rho, p_sigma> = delta z_rho.
template <Coefficient C>
C hall_inner(const SymFunc<C>& f, const SymFunc<C>& g) {
  if (f.degree() != g.degree())
    throw DomainError("hall_inner: degrees " + std::to_string(f.degree()) + " and " + std::to_string(g.degree()) + " differ");
  const auto pf = schur_to_powersum(f);
  const auto pg = schur_to_powersum(g);
  C acc{};
  for (const auto& [rho, c] : pf.terms()) {
    auto it = pg.terms().find(rho);
    if (it != pg.terms().end()) acc += c * it->second * Rat(rho.z_class());
  }
  return acc;
}

/// Product in the ring of symmetric functions; result in the basis of f.
template <Coefficient C>
SymFunc<C> multiply(const SymFunc<C>& f, const SymFunc<C>& g) {
  const auto pf = schur_to_powersum(f);
  const auto pg = schur_to_powersum(g);
  SymFunc<C> out(Basis::powersum, f.degree() + g.degree());
  for (const auto& [a, ca] : pf.terms())
    for (const auto& [b, cb] : pg.terms()) out.add_term(a.joined(b), ca * cb);
  return in_basis(out, f.basis());
}

/// h_a in Schur coordinates (= s_(a)); h_0 = 1.
inline SymFunc<Rat> complete_homog(int a) {
  if (a < 0) throw DomainError("complete_homog: a must be nonnegative");
  return a == 0 ? SymFunc<Rat>::schur(Partition{}) : SymFunc<Rat>::schur(Partition{a});
}

/// Coefficients c^beta in s_lambda(x_1^{m0}, x_2^{m0}, ...) = sum_beta c^beta s_beta,
/// via p_rho[p_{m0}] = p_{m0 rho}.
inline std::map<Partition, long long> plethysm_coeffs(const Partition& lambda, int m0) {
  if (m0 < 1) throw DomainError("plethysm_coeffs: m0 must be positive");
  std::map<Partition, Rat> acc;
  const auto betas = partitions_of(m0 * lambda.size());
  for (const auto& rho : partitions_of(lambda.size())) {
    long long chi = mn_character(lambda, rho);
    if (chi == 0) continue;
    const Rat w(Int(chi), rho.z_class());
    const Partition scaled = rho.scaled(m0);
    for (const auto& beta : betas) {
      long long x = mn_character(beta, scaled);
      if (x != 0) acc[beta] += w * x;
    }
  }
  std::map<Partition, long long> out;
  for (const auto& [beta, c] : acc) {
    if (c == 0) continue;
    if (!is_integer(c)) throw IndivisibleError("plethysm coefficient is not an integer");
    out.emplace(beta, numerator_of(c).convert_to<long long>());
  }
  return out;
}

/// prod_i 1 / (1 - q^{-rho_i})
inline QRatFun geometric_factor(const Partition& rho) {
  QExpPoly den(1L);
  for (int k : rho.parts()) den *= QExpPoly(1L) - QExpPoly::monomial(Exp(-k));
  return QRatFun(QExpPoly(1L), den);
}

/// f[X / (1 - q^{-1})]: p_k -> p_k / (1 - q^{-k}). Result in power sums.
template <Coefficient C>
SymFunc<QRatFun> substitute_geometric(const SymFunc<C>& f) {
  const auto pf = schur_to_powersum(f);
  SymFunc<QRatFun> out(Basis::powersum, f.degree());
  for (const auto& [rho, c] : pf.terms()) {
    QRatFun coef;
    if constexpr (std::is_same_v<C, QRatFun>) {
      coef = c;
    } else {
      coef = QRatFun(c);
    }
    out.add_term(rho, coef * geometric_factor(rho));
  }
  return out;
}

/// <s_beta[X / (1 - q^{-1})], s_mu>
inline QRatFun pleth_sub_coeff(const Partition& beta, const Partition& mu) {
  if (beta.size() != mu.size())
    throw DomainError("pleth_sub_coeff: |beta| = " + std::to_string(beta.size()) + " but |mu| = " + std::to_string(mu.size()));
  QRatFun acc;
  for (const auto& rho : partitions_of(beta.size())) {
    long long w = mn_character(beta, rho) * mn_character(mu, rho);
    if (w == 0) continue;
    acc += geometric_factor(rho) * Rat(Int(w), rho.z_class());
  }
  return acc;
}

/// Centered principal specialization s_lambda(q^{(1-n)/2}, ..., q^{(n-1)/2})
/// via the hook-content product prod [n + c(box)]_q / [h(box)]_q.
inline QExpPoly principal_spec(const Partition& lambda, int n) {
  if (n < 1) throw DomainError("principal_spec: n must be positive");
  if (lambda.num_rows() > n) return {};
  QExpPoly num(1L), den(1L);
  for (int i = 1; i <= lambda.num_rows(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) {
      num *= qint(n + lambda.content(i, j));
      den *= qint(lambda.hook(i, j));
    }
  return exact_div(num, den);
}

/// Same specialization computed as a sum over semistandard tableaux with
/// entry v weighted by q^{(2v - 1 - n)/2}.
inline QExpPoly principal_spec_tableaux(const Partition& lambda, int n) {
  if (n < 1) throw DomainError("principal_spec_tableaux: n must be positive");
  QExpPoly out;
  for_each_ssyt(lambda, n, [&](const Tableau& t) {
    long long twice = 0;
    for (const auto& row : t)
      for (int v : row) twice += 2 * v - 1 - n;
    out.add_term(Exp(twice, 2), Rat(1));
  });
  return out;
}

/// Class function on S_m, indexed by cycle type.
struct ClassFunction {
  int degree = 0;
  std::map<Partition, Rat> values;
};

/// Frobenius characteristic sum_rho chi(rho)/z_rho p_rho, in Schur coordinates.
inline SymFunc<Rat> frobenius_char(const ClassFunction& chi) {
  SymFunc<Rat> p(Basis::powersum, chi.degree);
  for (const auto& rho : partitions_of(chi.degree)) {
    auto it = chi.values.find(rho);
    if (it == chi.values.end()) throw DomainError("class function undefined on class (" + rho.to_string() + ")");
    p.add_term(rho, it->second / Rat(rho.z_class()));
  }
  return powersum_to_schur(p);
}

/// Expands a symmetric polynomial in r variables as sum c_mu s_mu(x_1..x_r)
/// by repeatedly subtracting the Schur polynomial of the lex-leading
/// exponent vector.
inline std::map<Partition, Rat> schur_expand_poly(MultiPoly p) {
  if (!p.is_symmetric()) throw DomainError("schur_expand_poly: polynomial is not symmetric");
  for (const auto& [e, c] : p.terms())
    for (int x : e)
      if (x < 0) throw DomainError("schur_expand_poly: negative exponent");
  std::map<Partition, Rat> out;
  while (!p.is_zero()) {
    const auto& [lead, c] = *p.terms().rbegin();
    std::vector<int> parts;
    for (int x : lead)
      if (x > 0) parts.push_back(x);
    const Partition mu(parts);
    const Rat coef = c;
    out.emplace(mu, coef);
    p -= schur_polynomial(mu, p.nvars()).scaled(coef);
  }
  return out;
}

/// sum_mu c_mu s_mu(x_1..x_r)
inline MultiPoly schur_combination_poly(const std::map<Partition, Rat>& coeffs, int r) {
  MultiPoly p(r);
  for (const auto& [mu, c] : coeffs) p += schur_polynomial(mu, r).scaled(c);
  return p;
}

}  // namespace gieseker
