#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dichotomy/formulas.hpp"
#include "dichotomy/graph_poly.hpp"
#include "dichotomy/matrix.hpp"
#include "dichotomy/poset_poly.hpp"
#include "dichotomy/rational.hpp"

namespace dichotomy {

/// Replayable record of how an instance was built from a 0/1 matrix.
struct Provenance {
  RationalMatrix source;
  std::vector<std::string> steps;

  bool operator==(const Provenance&) const = default;
};

/// Unweighted vertex-cover instance with its recovery map
/// tau(count) = (sign * count) mod modulus.
struct ReductionInstance {
  WeightedGraph graph;
  BigInt modulus;
  int sign = 1;
  std::size_t core_vertices = 0;  ///< vertices of the weighted core before leaves
  Provenance provenance;

  BigInt recover(const BigInt& count) const;

  bool operator==(const ReductionInstance&) const = default;
};

/// [[A, -I], [-I, 0]]; PER*(out) = PER(A). Entries of A must be 0 or 1.
RationalMatrix perm_to_partial_perm(const RationalMatrix& a);

/// Incidence graph of the partial-permanent graph weighted by b; its VCP is
/// PER*(b) because that graph has an even number of edges. Entries of b
/// must lie in {0, 1, -1}.
WeightedGraph partial_perm_to_vc(const RationalMatrix& b);

/// Removes weight-0 vertices, putting a self-loop on each neighbour. VCP is
/// unchanged. If an edge joins two weight-0 vertices the VCP is zero, and an
/// isolated weight -1 vertex is added to keep that factor.
WeightedGraph eliminate_zero_weights(const WeightedGraph& g);

struct SignedGraph {
  WeightedGraph graph;
  int sign;
};

/// Loop-free variant: removes weight-0 vertices together with their
/// neighbours (forced into every cover of nonzero weight), accumulating the
/// neighbours' +-1 weights into `sign`. VCP(g) = sign * VCP(out).
SignedGraph eliminate_zero_weights_by_deletion(const WeightedGraph& g);

/// Unweighted instance: modulus 2^v(g) + 1 and v(g) pendant leaves on each
/// weight -1 vertex, so that #VC(out) = VCP(g) (mod N). Weights must be +-1.
ReductionInstance simulate_neg_weights(const WeightedGraph& g);

/// Exact count by component splitting, leaf folding and branching on a
/// maximum-degree vertex. Weights are ignored; loops force membership.
BigInt count_vertex_covers(const WeightedGraph& g);
BigInt count_independent_sets(const WeightedGraph& g);

/// Bipartizes a {0, 1, -1}-weighted loop-free graph, then eliminates zero
/// weights by deletion and simulates the -1 weights. The result is
/// loop-free and 2-coloured.
ReductionInstance to_bipartite_vc(const WeightedGraph& g);

/// sigma: builds the instance for a 0/1 matrix without counting.
ReductionInstance emit_instance(const RationalMatrix& a, bool bipartite = false);
/// tau(count_vertex_covers(sigma(a))) = PER(a).
BigInt perm_via_vc(const RationalMatrix& a, bool bipartite = false);

/// Re-executes the recorded steps on the recorded source.
ReductionInstance replay(const Provenance& provenance);

/// Loops become the repeated-argument clauses (x_v | x_v) and (!x_v | !x_v).
Formula vc_to_positive2sat(const WeightedGraph& g);
Formula is_to_negative2sat(const WeightedGraph& g);
Formula ideal_to_implicative2sat(const Poset& p);

}  // namespace dichotomy
