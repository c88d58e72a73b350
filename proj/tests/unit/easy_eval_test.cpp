#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "dichotomy/easy_eval.hpp"
#include "dichotomy/errors.hpp"

using namespace dichotomy;

TEST(EasyFactor, Example) {
  Formula f(3);
  f.add_constraint(rel::not_equal(), {0, 1});
  f.add_constraint(rel::equal(), {1, 2});
  auto fp = easy_factor(f);
  ASSERT_TRUE(fp.consistent);
  ASSERT_EQ(fp.components.size(), 1u);
  EXPECT_EQ(fp.components[0].representative, 0u);
  EXPECT_EQ(fp.components[0].zero_branch, (Monomial{1, 2}));
  EXPECT_EQ(fp.components[0].one_branch, (Monomial{0}));
  EXPECT_EQ(expand(fp, 3), poly_of_formula(f));
  std::vector<Rational> ones(3, Rational(1));
  EXPECT_EQ(easy_evaluate(f, ones), 2);
}

TEST(EasyFactor, InconsistentAndFree) {
  Formula f(1);
  f.add_constraint(rel::zero(), {0});
  f.add_constraint(rel::one(), {0});
  auto fp = easy_factor(f);
  EXPECT_FALSE(fp.consistent);
  EXPECT_TRUE(expand(fp, 1).is_zero());

  auto free = easy_factor(Formula(4));
  EXPECT_EQ(free.components.size(), 4u);
  EXPECT_EQ(expand(free, 4), poly_of_formula(Formula(4)));

  Formula one(1);
  one.add_constraint(rel::one(), {0});
  std::vector<Rational> five{5};
  EXPECT_EQ(easy_evaluate(one, five), 5);
}

TEST(EasyFactor, RejectsHardRelations) {
  Formula f(2);
  f.add_constraint(rel::or0(), {0, 1});
  EXPECT_THROW(easy_factor(f), PreconditionError);
}

TEST(EasyFactor, LongChain) {
  const std::size_t n = 10000;
  Formula f(n);
  for (std::size_t i = 0; i + 1 < n; ++i) f.add_constraint(rel::equal(), {i, i + 1});
  std::vector<Rational> ones(n, Rational(1));
  EXPECT_EQ(easy_evaluate(f, ones), 2);
}

TEST(EasyFactor, WideEasyRelationsAgreeWithOracle) {
  // Rank-3 width-2 relations, e.g. {010, 111}, exercised through random formulas.
  std::vector<Relation> pool{rel::equal(), rel::not_equal(), rel::zero(), rel::one(),
                             Relation("r", 3, {0b010, 0b111}), Relation("s", 3, {0b000, 0b101})};
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    auto n = 1 + rng() % 10;
    Formula f(n);
    for (std::size_t c = 0, m = rng() % 8; c < m; ++c) {
      const auto& r = pool[rng() % pool.size()];
      std::vector<std::size_t> args;
      for (int i = 0; i < r.rank(); ++i) args.push_back(rng() % n);
      f.add_constraint(r, args);
    }
    auto x = oracle::random_point(rng, n);
    EXPECT_EQ(easy_evaluate(f, x), oracle::formula_value(f, x));
    EXPECT_EQ(oracle::to_poly(expand(easy_factor(f), n)), oracle::formula_poly(f));
  }
}
