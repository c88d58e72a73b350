#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dichotomy/formulas.hpp"
#include "dichotomy/graph_poly.hpp"
#include "dichotomy/polynomial.hpp"
#include "dichotomy/var_set.hpp"

namespace dichotomy {

/// Finite weighted poset. The strict order is stored transitively closed.
/// Two-level posets additionally carry levels (0 for V1, 1 for V2) and all
/// relations go from V1 to V2.
class Poset {
 public:
  /// `pairs` are (i, j) meaning i < j; the closure is computed here.
  /// Throws PreconditionError on a cycle or an out-of-range element.
  Poset(std::vector<Weight> weights, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const { return weights_.size(); }
  const std::vector<Weight>& weights() const { return weights_; }
  const Weight& weight(std::size_t x) const { return weights_[x]; }
  bool less(std::size_t x, std::size_t y) const { return lt_[x * size() + y] != 0; }
  bool comparable(std::size_t x, std::size_t y) const { return less(x, y) || less(y, x); }
  /// All strict pairs (x, y) with x < y, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

  const std::optional<std::vector<std::uint8_t>>& levels() const { return levels_; }
  /// Throws PreconditionError if some pair does not go from level 0 to 1.
  void set_levels(std::vector<std::uint8_t> levels);

 private:
  std::vector<Weight> weights_;
  std::vector<std::uint8_t> lt_;
  std::optional<std::vector<std::uint8_t>> levels_;
};

/// x < y iff x in V1, y in V2 and xy is an edge. Uses the graph's stored
/// bipartition, else a BFS colouring. Throws PreconditionError on loops or
/// odd cycles.
Poset poset_from_bipartite(const WeightedGraph& g);

bool is_antichain(const Poset& p, const VarSet& s);
bool is_ideal(const Poset& p, const VarSet& s);

/// Weighted sums over antichains and over ideals. Bound: kMaxEnumVertices
/// elements.
MultilinearPoly antichain_poly(const Poset& p);
MultilinearPoly ideal_poly(const Poset& p);

BigInt count_antichains(const Poset& p);
BigInt count_ideals(const Poset& p);

/// Natural bijection: an antichain maps to its downward closure, an ideal to
/// its maximal elements.
VarSet downward_closure(const Poset& p, const VarSet& antichain);
VarSet maximal_elements(const Poset& p, const VarSet& ideal);

/// Two-level bijection: keeps A on V2 and complements A on V1. Throws
/// PreconditionError if `antichain` is not one or p has no levels.
VarSet weighted_bijection(const Poset& p, const VarSet& antichain);

/// Weight of a subset as a polynomial (product of its element weights).
MultilinearPoly subset_weight(const Poset& p, const VarSet& s);

/// One constraint (x_j implies x_i) per strict pair x_i < x_j, written
/// OR1(x_j, x_i) with OR1(a, b) = !a | b.
Formula or1_formula_of_poset(const Poset& p);

}  // namespace dichotomy
