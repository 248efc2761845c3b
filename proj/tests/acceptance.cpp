// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "oracles.hpp"

using namespace gieseker;

namespace {

using Clock = std::chrono::steady_clock;

QExpPoly q(long long num, long long den = 1) { return QExpPoly::monomial(Exp(num, den)); }
const QExpPoly one(1L);

bool coprime(long a, long b) { return std::gcd(a, b) == 1; }

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 = no limit
  std::function<std::string()> run;  // empty string = pass
};

std::string fd_examples() {
  GLChar expected;
  expected.r = 2;
  expected.set(Partition({2, 1}), one);
  expected.set(Partition{3}, q(1) + q(-1));
  if (char_fd(2, 3, 2) != expected) return "char_fd(2,3,2) = " + to_text(char_fd(2, 3, 2));
  if (dim_fd(2, 3, 2) != Rat(10)) return "dim_fd(2,3,2) = " + dim_fd(2, 3, 2).str();
  return "";
}

std::string three_two_example() {
  for (long r : {2, 3, 4}) {
    GLChar expected;
    expected.r = static_cast<int>(r);
    expected.set(Partition({1, 1}), one);
    expected.set(Partition{2}, q(1) + q(-1));
    if (char_fd(3, 2, r) != expected) return "char_fd(3,2," + std::to_string(r) + ") = " + to_text(char_fd(3, 2, r));
  }
  return "";
}

std::string divisibility_sweep() {
  for (long n = 1; n <= 6; ++n)
    for (long m = 1; m <= 6; ++m) {
      if (!coprime(n, m)) continue;
      for (long r = 1; r <= 4; ++r) {
        const auto chi = char_fd(n, m, r);  // throws if [n]_q does not divide
        for (const auto& [mu, c] : chi.coeffs)
          if (!c.has_integer_coefficients() || !c.has_nonnegative_coefficients()) return "bad coefficient at " + std::to_string(n) + "," + std::to_string(m);
        Rat total = 0;
        const auto at_one = torus_at_q_one(torus_expand(chi));
        for (const auto& [e, c] : at_one.terms()) total += c;
        if (total != Rat(binomial(n * r + m - 1, m), Int(n))) return "torus total " + total.str();
      }
    }
  return "";
}

std::string symmetry_sweep() {
  for (long n = 1; n <= 6; ++n)
    for (long m = 1; m <= 6; ++m) {
      if (!coprime(n, m)) continue;
      for (long r = 1; r <= 4; ++r) {
        const auto s = symmetry_report(char_fd(n, m, r));
        if (!s.palindromic || s.degree != Exp((n - 1) * (m - 1), 2) || s.leading != Rat(binomial(r + m - 1, m)))
          return "failed at n=" + std::to_string(n) + " m=" + std::to_string(m) + " r=" + std::to_string(r);
      }
    }
  return "";
}

std::string parking_sweep() {
  for (long m = 1; m <= 7; ++m)
    for (long n = 1; n <= 7; ++n) {
      if (!coprime(m, n)) continue;
      for (long r = 1; r <= 3; ++r) {
        const Int c = parking_count(m, n, r);
        if (Rat(c) != dim_fd(n, m, r) || Int(parking_enumerate(m, n, r).size()) != c)
          return "mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
      }
    }
  if (parking_enumerate(3, 2, 2).size() != 10) return "labelled (3,2,2) count";
  const std::string expected = "2q_1^{-3} + 3q_1^{-2}q_2^{-1} + 3q_1^{-1}q_2^{-2} + 2q_2^{-3}";
  if (to_latex(t0_char_from_pf(3, 2, 2)) != expected) return "labelled (3,2,2) character " + to_latex(t0_char_from_pf(3, 2, 2));
  return "";
}

std::string genfun_sweep() {
  for (long n = 1; n <= 5; ++n)
    for (long m = 1; m <= 5; ++m) {
      if (!coprime(n, m)) continue;
      for (long r = 1; r <= 3; ++r) {
        const auto g = gen_function_coeff(n, r, m);
        if (!g.polynomial || *g.polynomial != char_fd_torus(n, m, r)) return "mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m);
      }
    }
  return "";
}

std::string qcatalan_sweep() {
  for (long n = 1; n <= 6; ++n)
    for (long m = 1; m <= 6; ++m) {
      if (!coprime(n, m)) continue;
      for (long r = 1; r <= 4; ++r)
        for (long d = 1; d <= r; ++d) {
          if (r % d) continue;
          const auto c = chd_closed(n, m, r, d);
          if (chd_substitute(n, m, r, d) != c) return "substitution differs at n=" + std::to_string(n) + " m=" + std::to_string(m) + " r=" + std::to_string(r) + " d=" + std::to_string(d);
          if (!c.has_integer_coefficients() || !c.has_nonnegative_coefficients()) return "non-integral";
          if (c.eval_at_one() != Rat(binomial(n * r + m - 1, m), Int(n))) return "value at 1";
        }
    }
  return "";
}

std::string dyck_sweep() {
  for (long m = 1; m <= 6; ++m)
    for (long n = 1; n <= 6; ++n) {
      if (!coprime(m, n)) continue;
      const auto f = frobenius_from_dyck(m, n);
      for (const auto& lambda : partitions_of(static_cast<int>(m)))
        if (f.coeff(lambda) != principal_spec(lambda, static_cast<int>(n)).eval_at_one() / Rat(n)) return "Frobenius mismatch";
      for (long r = 1; r <= 4; ++r) {
        std::map<Partition, long long> expected;
        for (const auto& [mu, c] : char_fd(n, m, r).coeffs) expected.emplace(mu, numerator_of(c.eval_at_one()).convert_to<long long>());
        if (glr_char_from_dyck(m, n, r) != expected) return "GL_r mismatch";
      }
    }
  return "";
}

std::string minsupp_degeneration() {
  for (auto [n, m] : {std::pair{2L, 3L}, {3L, 2L}, {2L, 1L}, {3L, 4L}, {4L, 3L}})
    for (long r = 1; r <= 3; ++r) {
      const auto ms = char_minsupp(n, m, r, Partition{1});
      GLChar poly;
      poly.r = ms.r;
      for (const auto& [mu, c] : ms.coeffs) {
        if (!c.is_polynomial()) return "non-polynomial coefficient " + to_text(c);
        poly.set(mu, c.as_polynomial());
      }
      if (poly != char_fd(n, m, r)) return "differs at n=" + std::to_string(n) + " m=" + std::to_string(m);
    }
  return "";
}

std::string r1_closed_form() {
  for (long n = 1; n <= 6; ++n)
    for (long m = 1; m <= 6; ++m) {
      if (!coprime(n, m)) continue;
      const QRatFun expected = QRatFun(qbinom(n + m - 1, n)) / QRatFun(qint(m));
      if (QRatFun(char_cherednik_fd(n, m).coeffs.at(Partition{static_cast<int>(n)})) != expected) return "Cherednik isotype";
      if (QRatFun(char_fd(n, m, 1).coeff(Partition{static_cast<int>(m)})) != expected) return "r = 1 character";
    }
  return "";
}

std::string molien_oracle() {
  const int N = 12;
  for (int m = 1; m <= 3; ++m)
    for (const auto& beta : partitions_of(m))
      for (long n = 1; n <= 4; ++n) {
        const auto chi = char_standard(beta, n, m);
        const Exp w = standard_weight(beta, n);
        for (const auto& mu : partitions_of(m)) {
          const auto series = oracle::reflection_isotype_series(beta, mu, N);
          QExpPoly expected;
          for (int k = 0; k <= N; ++k) expected.add_term(w - Exp(k), series[static_cast<std::size_t>(k)]);
          if (chi.coeff(mu).expand_in_inverse_q(w - Exp(N)) != expected) return "beta=" + beta.to_string() + " mu=" + mu.to_string();
        }
      }
  return "";
}

std::string zero_dim() {
  for (long n = 1; n <= 3; ++n)
    for (long r = 1; r <= 3; ++r)
      if (!dim_poly_roots_check(n, r)) return "n=" + std::to_string(n) + " r=" + std::to_string(r);
  return "";
}

std::string property_suites() {
  std::mt19937 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const auto a = oracle::random_qpoly(rng), b = oracle::random_qpoly(rng), c = oracle::random_qpoly(rng);
    if (a + b != b + a || a * b != b * a || (a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c) return "ring laws";
    if (!b.is_zero() && exact_div(a * b, b) != a) return "exact division";
  }
  using SF = SymFunc<Rat>;
  for (int m = 0; m <= 7; ++m)
    for (const auto& x : partitions_of(m))
      for (const auto& y : partitions_of(m))
        if (hall_inner(SF::schur(x), SF::schur(y)) != Rat(x == y ? 1 : 0)) return "Hall orthonormality";
  for (int size = 1; size <= 4; ++size)
    for (const auto& lambda : partitions_of(size))
      for (int m0 = 1; m0 <= 3; ++m0) {
        const int k = std::min(size * m0, 4);
        MultiPoly rhs(k);
        for (const auto& [beta, cb] : plethysm_coeffs(lambda, m0)) rhs += oracle::schur_jacobi_trudi(beta, k).scaled(Rat(cb));
        if (oracle::schur_jacobi_trudi(lambda, k).powers_substituted(m0) != rhs) return "plethysm identity";
      }
  for (int m = 0; m <= 6; ++m)
    for (const auto& lambda : partitions_of(m))
      for (int n = 1; n <= 4; ++n)
        if (principal_spec(lambda, n) != principal_spec_tableaux(lambda, n)) return "hook-content vs tableaux";
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked example char_fd(2,3,2) and dim 10", 1.0, fd_examples},
      {2, "char_fd(3,2,r) for r = 2,3,4", 0, three_two_example},
      {3, "divisibility and dimension sweep (m,n <= 6, r <= 4)", 30.0, divisibility_sweep},
      {4, "palindromic, degree and leading coefficient sweep", 0, symmetry_sweep},
      {5, "parking count = dimension = enumeration; labelled (3,2,2) example", 0, parking_sweep},
      {6, "generating function coefficient = torus character", 0, genfun_sweep},
      {7, "q-Catalan substitution = closed form", 0, qcatalan_sweep},
      {8, "Dyck-path Frobenius and GL_r characters", 0, dyck_sweep},
      {9, "minimal-support character degenerates to char_fd", 60.0, minsupp_degeneration},
      {10, "r = 1 closed form and Cherednik trivial isotype", 0, r1_closed_form},
      {11, "standard-module character vs Molien traces (N = 12)", 0, molien_oracle},
      {12, "dimension polynomial root check (n, r <= 3)", 0, zero_dim},
      {13, "property suites", 0, property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    std::string why;
    try {
      why = c.run();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (why.empty() && c.limit_seconds > 0 && secs > c.limit_seconds) why = "took " + std::to_string(secs) + " s";
    const bool pass = why.empty();
    failures += !pass;
    std::printf("%s %2d %s (%.3f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, secs, pass ? "" : ": ", why.c_str());
  }
  return failures;
}
