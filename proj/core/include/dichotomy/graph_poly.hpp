#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "dichotomy/formulas.hpp"
#include "dichotomy/matrix.hpp"
#include "dichotomy/polynomial.hpp"
#include "dichotomy/rational.hpp"

namespace dichotomy {

/// Reference to an indeterminate X_var in a shared variable namespace.
struct Symbol {
  std::size_t var;
  bool operator==(const Symbol&) const = default;
};

using Weight = std::variant<Rational, Symbol>;

inline bool is_symbol(const Weight& w) { return std::holds_alternative<Symbol>(w); }

using SymbolicMatrix = SquareMatrix<Weight>;

/// n x n matrix whose (i, j) entry is X_{i*n + j}.
SymbolicMatrix symbolic_matrix(std::size_t n);

inline constexpr std::size_t kMaxEnumVertices = 25;

/// Undirected vertex-weighted graph on vertices 0..n-1. Self-loops are
/// stored as (v, v). Optional bipartition labels: 0 for V1, 1 for V2.
class WeightedGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  ///< first <= second

  explicit WeightedGraph(std::size_t n = 0, const Weight& w = Rational(1));

  std::size_t add_vertex(const Weight& w);
  /// Set semantics: adding an existing edge is a no-op.
  void add_edge(std::size_t u, std::size_t v);

  std::size_t num_vertices() const { return weights_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const Weight& weight(std::size_t v) const { return weights_[v]; }
  void set_weight(std::size_t v, const Weight& w) { weights_[v] = w; }
  const std::vector<Weight>& weights() const { return weights_; }
  const std::set<Edge>& edges() const { return edges_; }

  bool has_edge(std::size_t u, std::size_t v) const;
  bool has_loop(std::size_t v) const { return has_edge(v, v); }
  bool has_loops() const;
  bool is_numeric() const;
  /// One past the largest symbol index used by a weight.
  std::size_t symbol_space() const;

  /// Neighbour lists without self-loops.
  std::vector<std::vector<std::size_t>> adjacency() const;

  const std::optional<std::vector<std::uint8_t>>& bipartition() const { return sides_; }
  /// Throws PreconditionError if a non-loop edge joins two vertices on the
  /// same side.
  void set_bipartition(std::vector<std::uint8_t> sides);

  bool operator==(const WeightedGraph&) const = default;

 private:
  std::vector<Weight> weights_;
  std::set<Edge> edges_;
  std::optional<std::vector<std::uint8_t>> sides_;
};

/// BFS 2-colouring; the smallest vertex of each component gets side 0.
/// nullopt when the graph has an odd cycle or a self-loop.
std::optional<std::vector<std::uint8_t>> two_coloring(const WeightedGraph& g);

/// Sum over injective partial maps pi of prod M(i, pi(i)).
Rational partial_permanent(const RationalMatrix& m);          // n <= 8
MultilinearPoly partial_permanent(const SymbolicMatrix& m);   // n <= 6

/// Ryser's formula for numeric matrices (n <= 10); permutation expansion for
/// symbolic ones (n <= 8).
Rational permanent(const RationalMatrix& m);
MultilinearPoly permanent(const SymbolicMatrix& m);

/// Vertices are the cells (i, j) of an n x n grid (index i*n + j, weight
/// X_{i*n+j}); two cells are adjacent iff they share a row or a column.
WeightedGraph build_partial_perm_graph(std::size_t n);
/// Same graph with the cell weights taken from m.
WeightedGraph build_partial_perm_graph(const RationalMatrix& m);

/// Independent-set and vertex-cover polynomials over the graph's symbol
/// space. A loop at v excludes v from every independent set and forces it
/// into every vertex cover. Throws BoundExceeded above kMaxEnumVertices and
/// PreconditionError when two vertices share a symbol.
MultilinearPoly ip(const WeightedGraph& g);
MultilinearPoly vcp(const WeightedGraph& g);

/// Numeric versions, with each vertex weight taken from the graph or, for
/// symbols, from `point`.
Rational ip_value(const WeightedGraph& g, std::span<const Rational> point = {});
Rational vcp_value(const WeightedGraph& g, std::span<const Rational> point = {});

/// Incidence graph: original vertices keep index and weight; edge k (in edge
/// order) becomes vertex n+k of weight -1 joined to its endpoints. Edge
/// vertices are side 0, original vertices side 1. Rejects self-loops.
/// VCP(out) = (-1)^e(G) IP(G) and IP(out) = VCP(G).
WeightedGraph incidence_transform(const WeightedGraph& g);

/// incidence_transform applied twice: IP(out) = (-1)^e(G) IP(G), VCP(out) = VCP(G).
WeightedGraph bipartize(const WeightedGraph& g);

/// One OR0 constraint per edge over one variable per vertex. Rejects loops.
Formula or0_formula_of_graph(const WeightedGraph& g);

/// OR2 constraints forbidding two 1s in one row or column of an n x n 0/1
/// matrix (variable i*n + j); P equals the symbolic partial permanent.
Formula or2_formula_partial_perm(std::size_t n);

}  // namespace dichotomy
