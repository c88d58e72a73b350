#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "dichotomy/errors.hpp"
#include "dichotomy/formats.hpp"

using namespace dichotomy;

TEST(Formats, RelationFile) {
  auto rs = parse_relations("# comment\nrelation R 3\n010\n111 # trailing\n\nend\nrelation E 1\nend\n");
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs[0].accepted(), (std::vector<Relation::Tuple>{0b010, 0b111}));
  EXPECT_TRUE(rs[1].accepted().empty());
  EXPECT_EQ(parse_relations(serialize_relations(rs))[0].accepted(), rs[0].accepted());
  EXPECT_THROW(parse_relations("relation R 2\n011\nend\n"), ParseError);
  EXPECT_THROW(parse_relations("relation R 2\n01\n"), ParseError);
  EXPECT_THROW(parse_relations("relation R 2\n01\n01\nend\n"), ParseError);
  try {
    parse_relations("relation R 2\n01\n2x\nend\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Formats, FormulaFile) {
  auto f = parse_formula("p csp 3 2\nNEQ 1 2\nEQ 2 3\n");
  EXPECT_EQ(to_display(poly_of_formula(f)), "X1 + X2*X3");
  EXPECT_EQ(parse_formula(serialize_formula(f)), f);
  std::vector<Relation> table{Relation("R", 2, {1})};
  EXPECT_EQ(count_sat(parse_formula("p csp 2 1\nR 2 1\n", table)), 1);
  EXPECT_THROW(parse_formula("p csp 2 1\nOR0 1 3\n"), ParseError);
  EXPECT_THROW(parse_formula("p csp 2 2\nOR0 1 2\n"), ParseError);
  EXPECT_THROW(parse_formula("p csp 2 1\nWHAT 1 2\n"), ParseError);
  EXPECT_THROW(parse_formula("p csp 2 1\nOR0 1\n"), ParseError);
  EXPECT_THROW(parse_formula("OR0 1 2\n"), ParseError);
}

TEST(Formats, GraphFile) {
  auto g = parse_graph("p graph 3 2\nv 1 X2\nv 2 -1/2\ne 1 2\ne 3 3\n");
  EXPECT_TRUE(is_symbol(g.weight(0)));
  EXPECT_EQ(std::get<Symbol>(g.weight(0)).var, 1u);
  EXPECT_EQ(std::get<Rational>(g.weight(1)), Rational(-1, 2));
  EXPECT_EQ(std::get<Rational>(g.weight(2)), 1);
  EXPECT_TRUE(g.has_loop(2));
  EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  EXPECT_THROW(parse_graph("p graph 2 1\ne 1 3\n"), ParseError);
  EXPECT_THROW(parse_graph("p graph 2 0\nv 1 X0\n"), ParseError);
  EXPECT_THROW(parse_graph("p graph 2 0\nv 1 1\nv 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("p graph 2 0\nq 1\n"), ParseError);
}

TEST(Formats, PosetFile) {
  auto p = parse_poset("p poset 3\nv 2 X1\nr 1 2\nr 2 3\n");
  EXPECT_TRUE(p.less(0, 2));
  auto q = parse_poset(serialize_poset(p));
  EXPECT_EQ(q.strict_pairs(), p.strict_pairs());
  EXPECT_EQ(q.weights(), p.weights());
  EXPECT_THROW(parse_poset("p poset 2\nr 1 2\nr 2 1\n"), ParseError);
}

TEST(Formats, MatrixFile) {
  auto m = parse_matrix("1 2\n3 4/5\n");
  EXPECT_EQ(m(1, 1), Rational(4, 5));
  EXPECT_EQ(parse_matrix(serialize_matrix(m)), m);
  EXPECT_THROW(parse_matrix("1 2\n3\n"), ParseError);
  EXPECT_THROW(parse_matrix("p matrix 3\n1 2\n3 4\n"), ParseError);
}

TEST(Formats, RandomRoundTrips) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_graph(rng, 1 + rng() % 12, 0.3, true);
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      if (rng() % 2) g.set_weight(v, oracle::random_rational(rng));
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
    auto text = serialize_graph(g);
    EXPECT_EQ(serialize_graph(parse_graph(text)), text);

    std::vector<Relation> pool{rel::or0(), rel::clause3(), rel::parity(4, true), rel::never()};
    auto n = 1 + rng() % 8;
    Formula f(n);
    for (std::size_t c = 0, m = rng() % 6; c < m; ++c) {
      const auto& r = pool[rng() % pool.size()];
      std::vector<std::size_t> args;
      for (int i = 0; i < r.rank(); ++i) args.push_back(rng() % n);
      f.add_constraint(r, args);
    }
    EXPECT_EQ(parse_formula(serialize_formula(f)), f);
  }
}

TEST(Formats, InstanceTrailersIgnoredByGraphParser) {
  auto inst = emit_instance(identity_matrix(1));
  auto text = serialize_instance(inst);
  EXPECT_NE(text.find("modulus "), std::string::npos);
  EXPECT_EQ(parse_graph(text).num_vertices(), inst.graph.num_vertices());
  EXPECT_THROW(parse_instance("p graph 1 0\n"), ParseError);
  EXPECT_THROW(parse_instance("p graph 1 0\nmodulus 3\nprovenance {bad\n"), ParseError);
}
