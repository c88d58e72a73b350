#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "dichotomy/errors.hpp"
#include "dichotomy/graph_poly.hpp"

using namespace dichotomy;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = oracle::random_rational(rng);
  return m;
}

WeightedGraph edge_graph() {
  WeightedGraph g(0);
  g.add_vertex(Symbol{0});
  g.add_vertex(Symbol{1});
  g.add_edge(0, 1);
  return g;
}

}  // namespace

TEST(Permanent, Examples) {
  EXPECT_EQ(to_display(permanent(symbolic_matrix(2))), "X1*X4 + X2*X3");
  EXPECT_EQ(to_display(partial_permanent(symbolic_matrix(1))), "1 + X1");
  EXPECT_EQ(to_display(partial_permanent(symbolic_matrix(2))), "1 + X1 + X2 + X3 + X4 + X1*X4 + X2*X3");
  EXPECT_EQ(permanent(identity_matrix(4)), 1);
  EXPECT_EQ(permanent(RationalMatrix(3, Rational(1))), 6);
  EXPECT_EQ(partial_permanent(RationalMatrix(3, Rational(0))), 1);
}

TEST(Permanent, AgreesWithBruteForce) {
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      auto m = random_matrix(rng, n);
      EXPECT_EQ(permanent(m), oracle::permanent(m));
      if (n <= 4) EXPECT_EQ(partial_permanent(m), oracle::partial_permanent(m));
    }
  for (std::size_t n = 1; n <= 3; ++n)
    EXPECT_EQ(oracle::to_poly(partial_permanent(symbolic_matrix(n))), oracle::partial_permanent_poly(n));
  EXPECT_THROW(permanent(RationalMatrix(11)), BoundExceeded);
}

TEST(GraphPoly, SingleEdgeAndLoop) {
  auto g = edge_graph();
  EXPECT_EQ(to_display(vcp(g)), "X1 + X2 + X1*X2");
  EXPECT_EQ(to_display(ip(g)), "1 + X1 + X2");
  WeightedGraph loop(0);
  loop.add_vertex(Symbol{0});
  loop.add_edge(0, 0);
  EXPECT_EQ(to_display(vcp(loop)), "X1");
  EXPECT_EQ(to_display(ip(loop)), "1");
}

TEST(GraphPoly, PartialPermGraph) {
  auto g2 = build_partial_perm_graph(2);
  EXPECT_EQ(g2.num_vertices(), 4u);
  EXPECT_EQ(g2.num_edges(), 4u);
  EXPECT_TRUE(g2.has_edge(0, 1) && g2.has_edge(1, 3) && g2.has_edge(2, 3) && g2.has_edge(0, 2));
  EXPECT_EQ(ip(g2), partial_permanent(symbolic_matrix(2)));
  EXPECT_EQ(to_display(ip(build_partial_perm_graph(1))), "1 + X1");
}

TEST(GraphPoly, AgreesWithBruteForce) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_graph(rng, 1 + rng() % 9, 0.4, true);
    EXPECT_EQ(oracle::to_poly(ip(g)), oracle::graph_poly(g, false));
    EXPECT_EQ(oracle::to_poly(vcp(g)), oracle::graph_poly(g, true));
    auto x = oracle::random_point(rng, g.num_vertices());
    EXPECT_EQ(ip_value(g, x), oracle::ip_value(g, x));
    EXPECT_EQ(vcp_value(g, x), oracle::vcp_value(g, x));
  }
}

TEST(GraphPoly, SharedSymbolRejected) {
  WeightedGraph g(2, Symbol{0});
  EXPECT_THROW(ip(g), PreconditionError);
}

TEST(Incidence, SingleEdgeBecomesPath) {
  auto h = incidence_transform(edge_graph());
  ASSERT_EQ(h.num_vertices(), 3u);
  EXPECT_EQ(std::get<Rational>(h.weight(2)), -1);
  EXPECT_TRUE(h.has_edge(0, 2) && h.has_edge(1, 2));
  EXPECT_EQ(to_display(vcp(h)), "-1 - X1 - X2");
  WeightedGraph loop(1);
  loop.add_edge(0, 0);
  EXPECT_THROW(incidence_transform(loop), PreconditionError);
}

TEST(Incidence, EdgelessUnchanged) {
  WeightedGraph g(3, Rational(2));
  EXPECT_EQ(incidence_transform(g).num_vertices(), 3u);
  EXPECT_EQ(bipartize(g).num_vertices(), 3u);
  EXPECT_EQ(ip_value(bipartize(g)), ip_value(g));
}

TEST(Incidence, FourCycleAndBipartize) {
  auto c4 = build_partial_perm_graph(2);
  auto h = incidence_transform(c4);
  EXPECT_EQ(h.num_vertices(), 8u);
  EXPECT_TRUE(two_coloring(h).has_value());
  EXPECT_EQ(oracle::to_poly(vcp(h)), oracle::graph_poly(c4, false));
  EXPECT_EQ(oracle::to_poly(ip(h)), oracle::graph_poly(c4, true));
  // The dual carries no sign: a single edge shows it.
  EXPECT_EQ(ip(incidence_transform(edge_graph())), vcp(edge_graph()));
  EXPECT_EQ(vcp(bipartize(edge_graph())), vcp(edge_graph()));
  EXPECT_EQ(ip(bipartize(c4)), partial_permanent(symbolic_matrix(2)));
  auto b = bipartize(edge_graph());
  EXPECT_EQ(b.num_vertices(), 5u);
  EXPECT_EQ(ip(b), ip(edge_graph()).scaled(-1));
}

TEST(Encodings, Or0AndOr2) {
  auto f = or0_formula_of_graph(edge_graph());
  EXPECT_EQ(to_display(poly_of_formula(f)), "X1 + X2 + X1*X2");
  EXPECT_EQ(poly_of_formula(or0_formula_of_graph(WeightedGraph(3))), poly_of_formula(Formula(3)));
  for (std::size_t n = 1; n <= 3; ++n)
    EXPECT_EQ(poly_of_formula(or2_formula_partial_perm(n)), partial_permanent(symbolic_matrix(n)));
}
