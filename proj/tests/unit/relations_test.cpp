#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "dichotomy/errors.hpp"
#include "dichotomy/relations.hpp"

using namespace dichotomy;

TEST(Relation, Construction) {
  EXPECT_THROW(Relation("bad", 0, {}), PreconditionError);
  EXPECT_THROW(Relation("bad", 2, {1, 1}), PreconditionError);
  EXPECT_THROW(Relation("bad", 2, {4}), PreconditionError);
  Relation r("r", 3, {0b010, 0b111});
  EXPECT_TRUE(r.accepts(0b111));
  EXPECT_FALSE(r.accepts(0b000));
  EXPECT_EQ(tuple_to_bits(0b001, 3), "100");
}

TEST(Relation, AffineExamples) {
  EXPECT_TRUE(is_affine(rel::not_equal()));
  EXPECT_FALSE(is_affine(rel::or0()));
  EXPECT_TRUE(is_affine(Relation("empty", 2, {})));
  EXPECT_TRUE(is_affine(rel::parity(3, true)));
  EXPECT_FALSE(is_affine(rel::clause3()));
}

TEST(Relation, AffineAgreesWithXorClosure) {
  for (int k = 1; k <= 3; ++k)
    for (std::uint32_t table = 0; table < (1u << (1u << k)); ++table) {
      auto r = Relation::from_predicate("r", k, [&](auto t) { return (table >> t) & 1; });
      EXPECT_EQ(is_affine(r), oracle::affine(r)) << k << " " << table;
    }
}

TEST(Relation, Width2AgreesWithExhaustiveConjunctions) {
  for (int k = 1; k <= 3; ++k)
    for (std::uint32_t table = 0; table < (1u << (1u << k)); ++table) {
      auto r = Relation::from_predicate("r", k, [&](auto t) { return (table >> t) & 1; });
      EXPECT_EQ(is_width2_expressible(r), oracle::width2(r)) << k << " " << table;
    }
}

TEST(Relation, ImpliedConstraints) {
  auto neq = implied_width2_constraints(rel::not_equal());
  ASSERT_EQ(neq.size(), 1u);
  EXPECT_EQ(to_string(neq[0]), "x1!=x2");
  auto r = implied_width2_constraints(Relation("r", 3, {0b010, 0b111}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(to_string(r[0]), "x2=1");
  EXPECT_EQ(to_string(r[1]), "x1=x3");
  EXPECT_TRUE(implied_width2_constraints(rel::or0()).empty());
}

TEST(Classify, Examples) {
  std::vector<Relation> easy{rel::equal(), rel::not_equal(), rel::zero()};
  auto c = classify(easy);
  EXPECT_EQ(c.verdict, Verdict::Easy);
  EXPECT_FALSE(c.witness);
  EXPECT_EQ(c.easy_decomposition.size(), 3u);

  std::vector<Relation> or2{rel::or2()};
  c = classify(or2);
  EXPECT_EQ(c.verdict, Verdict::Hard);
  EXPECT_EQ(c.witness->kind, WitnessKind::NonAffine);
  EXPECT_EQ(c.witness->relation, "OR2");

  std::vector<Relation> x3{rel::parity(3, true)};
  c = classify(x3);
  EXPECT_EQ(c.witness->kind, WitnessKind::WideAffine);

  EXPECT_THROW(classify(std::vector<Relation>{}), PreconditionError);
}

TEST(Builtins, Resolve) {
  EXPECT_EQ(rel::builtin("OR1")->accepted(), rel::or1().accepted());
  EXPECT_TRUE(rel::or1().accepts(0b00) && rel::or1().accepts(0b10) && rel::or1().accepts(0b11));
  EXPECT_FALSE(rel::or1().accepts(0b01));  // x=1, y=0
  EXPECT_EQ(rel::builtin("xor4_1")->rank(), 4);
  EXPECT_FALSE(rel::builtin("nope"));
}
