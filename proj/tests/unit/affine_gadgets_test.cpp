#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "dichotomy/affine_gadgets.hpp"
#include "dichotomy/errors.hpp"

using namespace dichotomy;

namespace {

Rational value(const AffineFormula& f, const std::vector<Rational>& x) {
  return oracle::formula_value(to_formula(f), x);
}

AffineFormula single(std::vector<std::size_t> vars, bool c, std::size_t n) {
  return {n, {{std::move(vars), c}}};
}

}  // namespace

TEST(PhiN, Examples) {
  EXPECT_EQ(to_display(poly_of_formula(to_formula(build_phi_n(2)))), "X1*X4 + X2*X3");
  EXPECT_EQ(to_display(poly_of_formula(to_formula(build_phi_n(1)))), "X1");
  EXPECT_EQ(build_phi_n(3).constraints.size(), 6u);
  std::vector<bool> ones(9, true);
  EXPECT_TRUE(eval_assignment(to_formula(build_phi_n(3)), ones));
}

TEST(PhiN, PermanentViaHom) {
  EXPECT_EQ(permanent_via_hom(RationalMatrix(2, Rational(1))), 2);
  EXPECT_EQ(permanent_via_hom(identity_matrix(3)), 1);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    RationalMatrix m(2);
    for (std::size_t i = 0; i < 4; ++i) m(i / 2, i % 2) = oracle::random_rational(rng);
    EXPECT_EQ(permanent_via_hom(m), m(0, 0) * m(1, 1) + m(0, 1) * m(1, 0));
  }
  EXPECT_THROW(permanent_via_hom(RationalMatrix(4)), BoundExceeded);
}

TEST(Gadgets, ShiftConstants) {
  auto s = shift_constants(single({0, 1}, true, 2));
  EXPECT_EQ(s.a, 2u);
  EXPECT_EQ(to_display(poly_of_formula(to_formula(s.formula))), "1 + X1*X2 + X1*X3 + X2*X3");
  auto unary = shift_constants(single({0}, true, 1));
  auto p = poly_of_formula(to_formula(unary.formula));
  auto coeff = linear_coefficient(as_evaluator(p), unary.a);
  std::vector<Rational> x{Rational(7, 2), Rational(0)};
  EXPECT_EQ(coeff(x), Rational(7, 2));
  auto zero = single({0, 1}, false, 2);
  auto z = shift_constants(zero);
  EXPECT_EQ(z.formula.num_vars, 3u);
  EXPECT_EQ(z.formula.constraints, zero.constraints);
}

TEST(Gadgets, ChainDecompose) {
  auto g = chain_decompose(single({0, 1, 2, 3}, false, 4));
  EXPECT_EQ(g.formula.constraints.size(), 2u);
  EXPECT_EQ(g.formula.num_vars, 5u);
  EXPECT_EQ(g.aux_values, (std::vector<int>{1}));
  auto five = chain_decompose(single({0, 1, 2, 3, 4}, false, 5));
  EXPECT_EQ(five.formula.constraints.size(), 3u);
  EXPECT_EQ(five.aux_values.size(), 2u);
  auto tern = single({0, 1, 2}, false, 3);
  EXPECT_EQ(chain_decompose(tern).formula, tern);
  EXPECT_THROW(chain_decompose(single({0, 1, 2, 3}, true, 4)), PreconditionError);
}

TEST(Gadgets, TernaryFlipAndPad) {
  auto f = single({0, 1, 2}, false, 3);
  auto t = ternary0_to_ternary1(f);
  EXPECT_EQ(t.aux_values, (std::vector<int>{1, 0}));
  EXPECT_EQ(ternary0_to_ternary1(AffineFormula{3, {}}).formula, (AffineFormula{3, {}}));
  AffineFormula two{4, {{{0, 1, 2}, false}, {{1, 2, 3}, false}}};
  EXPECT_EQ(ternary0_to_ternary1(two).formula.num_vars, 8u);

  auto padded = pad_to_relation(f, 4, false);
  EXPECT_EQ(padded.formula.constraints[0].vars.size(), 4u);
  EXPECT_EQ(pad_to_relation(f, 3, false).formula, f);
}

TEST(Gadgets, EachGadgetPreservesValues) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng() % 3;
    AffineFormula f{n, {}};
    for (std::size_t c = 0, m = 1 + rng() % 2; c < m; ++c) {
      std::vector<std::size_t> vars(n);
      std::iota(vars.begin(), vars.end(), 0);
      std::shuffle(vars.begin(), vars.end(), rng);
      vars.resize(3 + rng() % (n - 2));
      f.constraints.push_back({vars, false});
    }
    auto x = oracle::random_point(rng, n);
    auto base = value(f, x);

    auto chain = chain_decompose(f);
    EXPECT_EQ(value(chain.formula, chain.extend(x)), base);

    auto ternary = chain.formula;
    auto flipped = ternary0_to_ternary1(ternary);
    auto cx = chain.extend(x);
    EXPECT_EQ(value(flipped.formula, flipped.extend(cx)), base);

    auto padded = pad_to_relation(ternary, 5, false);
    EXPECT_EQ(value(padded.formula, padded.extend(cx)), base);

    AffineFormula odd{n, {}};
    for (auto c : f.constraints) odd.constraints.push_back({c.vars, true});
    auto shifted = shift_constants(odd);
    auto p = poly_of_formula(to_formula(shifted.formula));
    auto y = x;
    y.push_back(Rational(0));
    EXPECT_EQ(linear_coefficient(as_evaluator(p), shifted.a)(y), value(odd, x));
  }
}
