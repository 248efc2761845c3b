#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace gieseker;

namespace {

using SF = SymFunc<Rat>;

QExpPoly q(long long num, long long den = 1) { return QExpPoly::monomial(Exp(num, den)); }
const QExpPoly one(1L);

SF schur_sum(std::initializer_list<std::pair<Partition, long>> terms) {
  SF f(Basis::schur, terms.begin()->first.size());
  for (const auto& [p, c] : terms) f.add_term(p, Rat(c));
  return f;
}

}  // namespace

TEST(MnCharacter, Examples) {
  for (const auto& rho : partitions_of(5)) {
    EXPECT_EQ(mn_character(Partition{5}, rho), 1);
    EXPECT_EQ(mn_character(Partition::rectangle(1, 5), rho), rho.sign());
  }
  EXPECT_EQ(mn_character(Partition({2, 1}), Partition{3}), -1);
  EXPECT_EQ(mn_character(Partition{}, Partition{}), 1);
  EXPECT_THROW(mn_character(Partition({2, 1}), Partition{2}), DomainError);
}

TEST(MnCharacter, MatchesAlternantOracle) {
  for (int m = 1; m <= 6; ++m)
    for (const auto& lambda : partitions_of(m))
      for (const auto& rho : partitions_of(m))
        EXPECT_EQ(mn_character(lambda, rho), oracle::character(lambda, rho)) << lambda.to_string() << " " << rho.to_string();
}

TEST(MnCharacter, S3TableFromPermutations) {
  // Trace of the permutation representation on C^3 is #fixed points = 1 + chi^(2,1).
  for (const auto& perm : oracle::permutations(3)) {
    int fixed = 0;
    for (int i = 0; i < 3; ++i) fixed += perm[static_cast<std::size_t>(i)] == i;
    EXPECT_EQ(mn_character(Partition({2, 1}), oracle::cycle_type(perm)), fixed - 1);
  }
}

TEST(BasisChange, Examples) {
  EXPECT_EQ(schur_to_powersum(SF::schur(Partition{1})), SF::powersum(Partition{1}));
  SF expected(Basis::powersum, 2);
  expected.add_term(Partition({1, 1}), Rat(1, 2));
  expected.add_term(Partition{2}, Rat(1, 2));
  EXPECT_EQ(schur_to_powersum(SF::schur(Partition{2})), expected);
}

TEST(BasisChange, RandomRoundTrip) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> co(-5, 5);
  for (int m = 0; m <= 8; ++m)
    for (int trial = 0; trial < 5; ++trial) {
      SF f(Basis::schur, m);
      for (const auto& p : partitions_of(m)) f.add_term(p, Rat(co(rng)));
      EXPECT_EQ(powersum_to_schur(schur_to_powersum(f)), f);
      const auto g = schur_to_powersum(f);
      EXPECT_EQ(schur_to_powersum(powersum_to_schur(g)), g);
    }
}

TEST(HallInner, Examples) {
  EXPECT_EQ(hall_inner(SF::schur(Partition({2, 1})), SF::schur(Partition({2, 1}))), Rat(1));
  EXPECT_EQ(hall_inner(SF::powersum(Partition{2}), SF::powersum(Partition{2})), Rat(2));
  EXPECT_EQ(hall_inner(SF::powersum(Partition({1, 1})), SF::schur(Partition{2})), Rat(1));
  EXPECT_THROW(hall_inner(SF::schur(Partition{2}), SF::schur(Partition{3})), DomainError);
}

TEST(HallInner, OrthonormalityThroughSeven) {
  for (int m = 0; m <= 7; ++m) {
    const auto ps = partitions_of(m);
    for (const auto& a : ps)
      for (const auto& b : ps) {
        EXPECT_EQ(hall_inner(SF::schur(a), SF::schur(b)), Rat(a == b ? 1 : 0));
        EXPECT_EQ(hall_inner(SF::powersum(a), SF::powersum(b)), a == b ? Rat(a.z_class()) : Rat(0));
      }
  }
}

TEST(Multiply, PieriExamples) {
  EXPECT_EQ(complete_homog(0), SF::schur(Partition{}));
  EXPECT_EQ(multiply(complete_homog(2), complete_homog(1)), schur_sum({{Partition{3}, 1}, {Partition({2, 1}), 1}}));
  const auto h1 = complete_homog(1);
  EXPECT_EQ(multiply(multiply(h1, h1), h1), schur_sum({{Partition{3}, 1}, {Partition({2, 1}), 2}, {Partition({1, 1, 1}), 1}}));
  EXPECT_THROW(complete_homog(-1), DomainError);
}

TEST(Multiply, AgreesWithPolynomialProduct) {
  // s_a s_b in enough variables, expanded back into Schur polynomials.
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (const auto& la : partitions_of(a))
        for (const auto& lb : partitions_of(b)) {
          const int r = a + b;
          const auto prod = schur_polynomial(la, r) * schur_polynomial(lb, r);
          const auto f = multiply(SF::schur(la), SF::schur(lb));
          EXPECT_EQ(schur_expand_poly(prod), f.terms());
        }
}

TEST(Plethysm, Examples) {
  using M = std::map<Partition, long long>;
  EXPECT_EQ(plethysm_coeffs(Partition{1}, 1), (M{{Partition{1}, 1}}));
  EXPECT_EQ(plethysm_coeffs(Partition{1}, 2), (M{{Partition{2}, 1}, {Partition({1, 1}), -1}}));
  EXPECT_EQ(plethysm_coeffs(Partition{2}, 1), (M{{Partition{2}, 1}}));
  EXPECT_THROW(plethysm_coeffs(Partition{1}, 0), DomainError);
}

TEST(Plethysm, PolynomialEvaluationIdentity) {
  // s_lambda(x_1^{m0}, ..., x_k^{m0}) = sum_beta c^beta s_beta(x_1, ..., x_k)
  for (int size = 1; size <= 4; ++size)
    for (const auto& lambda : partitions_of(size))
      for (int m0 = 1; m0 <= 3; ++m0) {
        const int k = std::min(size * m0, 4);
        const auto lhs = oracle::schur_jacobi_trudi(lambda, k).powers_substituted(m0);
        MultiPoly rhs(k);
        for (const auto& [beta, c] : plethysm_coeffs(lambda, m0)) rhs += oracle::schur_jacobi_trudi(beta, k).scaled(Rat(c));
        EXPECT_EQ(lhs, rhs) << lambda.to_string() << " m0=" << m0;
      }
}

TEST(SchurPolynomial, MatchesJacobiTrudi) {
  for (int m = 0; m <= 5; ++m)
    for (const auto& lambda : partitions_of(m))
      for (int r = 1; r <= 4; ++r) EXPECT_EQ(schur_polynomial(lambda, r), oracle::schur_jacobi_trudi(lambda, r));
}

TEST(PlethSub, Examples) {
  EXPECT_EQ(pleth_sub_coeff(Partition{1}, Partition{1}), QRatFun(one, one - q(-1)));
  EXPECT_EQ(pleth_sub_coeff(Partition{2}, Partition{2}), QRatFun(one, (one - q(-1)) * (one - q(-2))));
  EXPECT_EQ(pleth_sub_coeff(Partition{2}, Partition({1, 1})), QRatFun(q(-1), (one - q(-1)) * (one - q(-2))));
  EXPECT_THROW(pleth_sub_coeff(Partition{2}, Partition{1}), DomainError);
}

TEST(PlethSub, MatchesTruncatedAlphabetSeries) {
  // In one variable only s_(m) survives, so <s_beta[X/(1-t)], s_(m)> is
  // s_beta(1, t, t^2, ...). With t = q^{-1} and the alphabet cut at N letters,
  // Jacobi-Trudi over truncated h-series is exact above degree -N.
  const int N = 20;
  auto h_series = [&](int k) {
    QExpPoly s;
    if (k < 0) return s;
    std::function<void(int, int, int)> rec = [&](int left, int from, int deg) {
      if (left == 0) {
        s.add_term(Exp(-deg), Rat(1));
        return;
      }
      for (int i = from; i < N; ++i) rec(left - 1, i, deg + i);
    };
    rec(k, 0, 0);
    return s;
  };
  auto truncate = [&](const QExpPoly& p) {
    QExpPoly t;
    for (const auto& [e, c] : p.terms())
      if (e > Exp(-N)) t.add_term(e, c);
    return t;
  };
  for (int m = 1; m <= 4; ++m)
    for (const auto& beta : partitions_of(m)) {
      const int l = beta.num_rows();
      std::vector<std::vector<QExpPoly>> a(static_cast<std::size_t>(l), std::vector<QExpPoly>(static_cast<std::size_t>(l)));
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h_series(beta.row(i + 1) - i + j);
      const auto expected = truncate(oracle::determinant(a, one, QExpPoly()));
      const auto got = pleth_sub_coeff(beta, Partition{m}).expand_in_inverse_q(Exp(-N + 1));
      EXPECT_EQ(got, expected) << beta.to_string();
    }
}

TEST(PrincipalSpec, Examples) {
  EXPECT_EQ(principal_spec(Partition{1}, 2), qint(2));
  EXPECT_TRUE(principal_spec(Partition({1, 1, 1}), 2).is_zero());
  EXPECT_EQ(principal_spec(Partition{2}, 2), qint(3));
  EXPECT_THROW(principal_spec(Partition{1}, 0), DomainError);
}

TEST(PrincipalSpec, HookContentMatchesTableauxAndJacobiTrudi) {
  for (int m = 0; m <= 6; ++m)
    for (const auto& lambda : partitions_of(m))
      for (int n = 1; n <= 4; ++n) {
        const auto hc = principal_spec(lambda, n);
        EXPECT_EQ(hc, principal_spec_tableaux(lambda, n)) << lambda.to_string() << " n=" << n;
        EXPECT_EQ(hc, oracle::centered_specialization(oracle::schur_jacobi_trudi(lambda, n)));
        EXPECT_TRUE(is_palindromic(hc));
      }
}

TEST(Frobenius, Examples) {
  auto chi = [](int m, std::function<Rat(const Partition&)> f) {
    ClassFunction c{m, {}};
    for (const auto& rho : partitions_of(m)) c.values[rho] = f(rho);
    return frobenius_char(c);
  };
  EXPECT_EQ(chi(3, [](const Partition&) { return Rat(1); }), SF::schur(Partition{3}));
  EXPECT_EQ(chi(3, [](const Partition& rho) { return rho == Partition({1, 1, 1}) ? Rat(6) : Rat(0); }),
            schur_sum({{Partition{3}, 1}, {Partition({2, 1}), 2}, {Partition({1, 1, 1}), 1}}));
  for (int m = 1; m <= 5; ++m)
    EXPECT_EQ(chi(m, [](const Partition& rho) { return Rat(rho.sign()); }), SF::schur(Partition::rectangle(1, m)));
  EXPECT_THROW(frobenius_char(ClassFunction{2, {{Partition{2}, Rat(1)}}}), DomainError);
}

TEST(SchurExpand, Examples) {
  for (const auto& mu : partitions_of(4, 3)) EXPECT_EQ(schur_expand_poly(schur_polynomial(mu, 3)), (std::map<Partition, Rat>{{mu, Rat(1)}}));
  EXPECT_EQ(schur_expand_poly(complete_homog_poly(2, 2) * complete_homog_poly(1, 2)),
            (std::map<Partition, Rat>{{Partition{3}, Rat(1)}, {Partition({2, 1}), Rat(1)}}));
  EXPECT_EQ(schur_expand_poly(elementary_poly(2, 2)), (std::map<Partition, Rat>{{Partition({1, 1}), Rat(1)}}));
  MultiPoly x1(2);
  x1.add_term({1, 0}, Rat(1));
  EXPECT_THROW(schur_expand_poly(x1), DomainError);
}

TEST(SymFunc, DegreeChecks) {
  SF f(Basis::schur, 3);
  EXPECT_THROW(f.add_term(Partition{2}, Rat(1)), DomainError);
  EXPECT_THROW(f += SF::schur(Partition{2}), DomainError);
}
