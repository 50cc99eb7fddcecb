#include <gtest/gtest.h>

#include <random>

#include "dempoly/demazure.hpp"
#include "dempoly/polysum.hpp"
#include "test_support.hpp"

namespace dempoly {
namespace {

FormalSum e(const Weight& mu, int c = 1) { return FormalSum::monomial(mu, c); }

// Brute-force D_i e^lambda from the defining quotient: f = D_i e^lambda is
// the unique finite sum with (1 - e^{-alpha}) f = e^lambda - e^{-alpha} e^{r_i lambda}.
bool solves_quotient(const RootSystem& rs, std::size_t i, const Weight& lambda, const FormalSum& f) {
  const Weight& alpha = rs.simple_root(i).weight_coords;
  const FormalSum lhs = f - mul_exp(f, -alpha);
  const FormalSum rhs = e(lambda) - e(reflect_simple(rs, i, lambda) - alpha);
  return lhs == rhs;
}

TEST(DSimple, StringBranches) {
  const RootSystem rs = build_root_system("A2");
  // alpha_1 = (2,-1)
  EXPECT_EQ(apply_D_simple(rs, 1, e({2, 0})), e({2, 0}) + e({0, 1}) + e({-2, 2}));
  EXPECT_TRUE(apply_D_simple(rs, 1, e({-1, 0})).is_zero());
  EXPECT_EQ(apply_D_simple(rs, 1, e({-3, 0})), e({-1, -1}, -1) + e({1, -2}, -1));
  // r_1(lambda + alpha_1) is the last term of the negative branch
  EXPECT_EQ(reflect_simple(rs, 1, Weight{-1, -1}), (Weight{1, -2}));
}

TEST(DSimple, AgreesWithDefiningQuotient) {
  for (const char* name : {"A2", "B2", "G2"}) {
    const RootSystem rs = build_root_system(name);
    for (std::size_t i = 1; i <= 2; ++i)
      for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b) {
          const Weight lambda{a, b};
          EXPECT_TRUE(solves_quotient(rs, i, lambda, apply_D_simple(rs, i, e(lambda)))) << name << i << lambda;
        }
  }
}

TEST(dSimple, Examples) {
  const RootSystem rs = build_root_system("A2");
  EXPECT_TRUE(apply_d_simple(rs, 1, e({0, 3})).is_zero());
  EXPECT_EQ(apply_d_simple(rs, 1, e({2, 0})), e({0, 1}) + e({-2, 2}));
  EXPECT_EQ(apply_d_simple(rs, 1, e({-1, 0})), e({-1, 0}, -1));
}

TEST(DRoot, SimpleRootCoincides) {
  std::mt19937 rng(31);
  for (const char* name : testing::small_algebras()) {
    const RootSystem rs = build_root_system(name);
    for (int t = 0; t < 100; ++t) {
      const FormalSum s = testing::random_sum(rng, rs.rank());
      for (std::size_t i = 1; i <= rs.rank(); ++i) {
        EXPECT_EQ(apply_D_root(rs, rs.simple_root(i), s), apply_D_simple(rs, i, s));
        EXPECT_EQ(apply_d_root(rs, rs.simple_root(i), s), apply_d_simple(rs, i, s));
      }
    }
  }
}

TEST(DRoot, A2HighestRootString) {
  const RootSystem rs = build_root_system("A2");
  const Root& theta = rs.positive_root({1, 1});
  const FormalSum got = apply_D_root(rs, theta, e({1, 1}));
  EXPECT_EQ(got, e({1, 1}) + e({0, 0}) + e({-1, -1}));
  EXPECT_EQ(reflect_at_root(rs, theta, Weight{1, 1}), (Weight{-1, -1}));
  EXPECT_EQ(apply_d_root(rs, theta, e({1, 1})), e({0, 0}) + e({-1, -1}));
}

TEST(DRoot, RejectsNonPositive) {
  const RootSystem rs = build_root_system("A2");
  EXPECT_THROW(apply_D_root(rs, RootSystem::negate(rs.simple_root(1)), e({1, 0})), InvalidArgument);
  EXPECT_THROW(apply_d_root(rs, RootSystem::negate(rs.simple_root(1)), e({1, 0})), InvalidArgument);
  EXPECT_THROW(apply_D_simple(rs, 3, e({1, 0})), InvalidArgument);
  EXPECT_THROW(apply_D_simple(rs, 1, e({1, 0, 0})), InvalidArgument);
}

TEST(DRoot, IdempotenceAndLinearity) {
  std::mt19937 rng(32);
  for (const char* name : testing::small_algebras()) {
    const RootSystem rs = build_root_system(name);
    for (int t = 0; t < 60; ++t) {
      const FormalSum a = testing::random_sum(rng, rs.rank());
      const FormalSum b = testing::random_sum(rng, rs.rank());
      for (const auto& beta : rs.positive_roots()) {
        const FormalSum Da = apply_D_root(rs, beta, a);
        EXPECT_EQ(apply_D_root(rs, beta, Da), Da);
        const FormalSum da = apply_d_root(rs, beta, a);
        EXPECT_EQ(apply_d_root(rs, beta, da), -da);
        EXPECT_EQ(apply_D_root(rs, beta, a + b), Da + apply_D_root(rs, beta, b));
        EXPECT_EQ(apply_D_root(rs, beta, Coefficient(3) * a), Coefficient(3) * Da);
      }
    }
  }
}

TEST(ApplyWord, EmptyWordIsIdentity) {
  const RootSystem rs = build_root_system("B2");
  std::mt19937 rng(33);
  const FormalSum s = testing::random_sum(rng, 2);
  EXPECT_EQ(apply_word(rs, WeylWord{}, s, Flavor::D), s);
  EXPECT_EQ(apply_word(rs, WeylWord{}, s, Flavor::d), s);
}

TEST(ApplyWord, RightmostLetterFirst) {
  const RootSystem rs = build_root_system("A2");
  const FormalSum s = e({2, 1});
  EXPECT_EQ(apply_word(rs, WeylWord{1, 2}, s, Flavor::D), apply_D_simple(rs, 1, apply_D_simple(rs, 2, s)));
  EXPECT_NE(apply_word(rs, WeylWord{1, 2}, s, Flavor::D), apply_word(rs, WeylWord{2, 1}, s, Flavor::D));
}

WeylWord alternating(std::size_t first, std::size_t m) {
  WeylWord w;
  for (std::size_t k = 0; k < m; ++k) w.push_back(k % 2 == 0 ? first : 3 - first);
  return w;
}

TEST(ApplyWord, BraidRelations) {
  struct Case {
    const char* name;
    std::size_t m;
  };
  for (const Case c : {Case{"A2", 3}, Case{"B2", 4}, Case{"G2", 6}}) {
    const RootSystem rs = build_root_system(c.name);
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b)
        for (Flavor f : {Flavor::D, Flavor::d}) {
          const FormalSum s = e({a, b});
          EXPECT_EQ(apply_word(rs, alternating(1, c.m), s, f), apply_word(rs, alternating(2, c.m), s, f))
              << c.name << " " << Weight{a, b};
        }
  }
}

TEST(ApplyWord, IndependentOfReducedWordA3) {
  const RootSystem rs = build_root_system("A3");
  const WeylGroupTable t = weyl_group(rs);
  const Weight lambda{1, 2, 1};
  const Weight target = apply_word(rs, t.longest().word, Weight{1, 2, 3});
  std::vector<WeylWord> reduced;
  for (int code = 0; code < 729; ++code) {
    WeylWord w;
    for (int k = 0, c = code; k < 6; ++k, c /= 3) w.push_back(static_cast<std::size_t>(c % 3 + 1));
    if (apply_word(rs, w, Weight{1, 2, 3}) == target) reduced.push_back(w);
  }
  EXPECT_EQ(reduced.size(), 16u);
  const FormalSum ref = apply_word(rs, reduced.front(), e({1, 2, 1}), Flavor::D);
  for (const auto& w : reduced) {
    EXPECT_EQ(apply_word(rs, w, FormalSum::monomial(lambda), Flavor::D), ref) << word_str(w);
  }
}

TEST(CharacterDemazure, A1Strings) {
  const RootSystem rs = build_root_system("A1");
  for (int n = 0; n <= 6; ++n) {
    FormalSum expected(1);
    for (int k = 0; k <= n; ++k) expected.add_term(Weight{n - 2 * k}, 1);
    EXPECT_EQ(character_demazure(rs, Weight{n}), expected);
    EXPECT_EQ(character_demazure_sum(rs, Weight{n}), expected);
    const FormalSum dd = apply_d_root(rs, rs.simple_root(1), e({n})) + e({n});
    EXPECT_EQ(dd, expected);
  }
}

TEST(CharacterDemazure, Examples) {
  const RootSystem rs = build_root_system("A2");
  EXPECT_EQ(character_demazure(rs, Weight{0, 0}), e({0, 0}));
  EXPECT_EQ(character_demazure_sum(rs, Weight{0, 0}), e({0, 0}));
  const FormalSum adj = character_demazure(rs, Weight{1, 1});
  EXPECT_EQ(coefficient_sum(adj), 8);
  EXPECT_EQ(adj.coefficient(Weight{0, 0}), 2);
  EXPECT_EQ(adj, character_freudenthal(rs, Weight{1, 1}));
  EXPECT_THROW(character_demazure(rs, Weight{-1, 1}), InvalidArgument);
  EXPECT_THROW(character_demazure_sum(rs, Weight{1, -1}), InvalidArgument);
}

TEST(CharacterDemazure, BothFormulasAgreeOnA2) {
  const RootSystem rs = build_root_system("A2");
  const WeylGroupTable t = weyl_group(rs);
  for (const auto& lambda : dominant_grid(2, 3)) {
    const FormalSum ch = character_demazure(rs, t, lambda);
    EXPECT_EQ(character_demazure_sum(rs, t, lambda), ch) << lambda;
    EXPECT_EQ(ch.coefficient(lambda), 1);
    for (const auto& [mu, c] : ch.terms()) EXPECT_GE(c, 1);
  }
}

TEST(OperatorExpr, ApplicationOrder) {
  const RootSystem rs = build_root_system("A2");
  const Root& a1 = rs.simple_root(1);
  const Root& a2 = rs.simple_root(2);
  const FormalSum s = e({1, 1});
  OperatorExpr expr;
  expr.add({Atom::d_root(a2), Atom::r_root(a1)}).add_identity();
  const FormalSum expected = apply_d_root(rs, a2, apply_r_root(rs, a1, s)) + s;
  EXPECT_EQ(apply(rs, expr, s), expected);

  OperatorExpr scaled;
  scaled.add({Atom::D_simple(rs, 1)}, -2);
  EXPECT_EQ(apply(rs, scaled, s), Coefficient(-2) * apply_D_simple(rs, 1, s));

  const OperatorProduct prod{OperatorExpr{}.add({Atom::D_simple(rs, 2)}), OperatorExpr{}.add({Atom::D_simple(rs, 1)})};
  EXPECT_EQ(apply(rs, prod, s), apply_word(rs, WeylWord{2, 1}, s, Flavor::D));
}

}  // namespace
}  // namespace dempoly
