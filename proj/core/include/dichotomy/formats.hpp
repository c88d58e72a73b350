#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dichotomy/formulas.hpp"
#include "dichotomy/graph_poly.hpp"
#include "dichotomy/implement.hpp"
#include "dichotomy/matrix.hpp"
#include "dichotomy/poset_poly.hpp"
#include "dichotomy/relations.hpp"
#include "dichotomy/sharp_reductions.hpp"

namespace dichotomy {

// Every parser ignores blank lines and text after '#', and throws ParseError
// with the offending line number.

/// `relation <name> <rank>`, one bitstring per accepted tuple, `end`.
std::vector<Relation> parse_relations(std::string_view text);
std::string serialize_relations(std::span<const Relation> relations);

/// `p csp <n> <m>` then `<relation> <i1> .. <ik>` (1-based). Names resolve
/// against `table` first, then the built-in relations.
Formula parse_formula(std::string_view text, std::span<const Relation> table = {});
std::string serialize_formula(const Formula& f);

/// `p graph <n> <m>`, `v <id> <weight>`, `e <u> <v>` (1-based ids). A
/// weight is a rational or a symbol `X<k>` (1-based). Unlisted vertices
/// have weight 1. Instance trailers (`modulus`, `sign`, `provenance`) are
/// ignored here.
WeightedGraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedGraph& g);

/// `p poset <n>`, `v <id> <weight>`, `r <i> <j>` meaning i < j.
Poset parse_poset(std::string_view text);
std::string serialize_poset(const Poset& p);

/// Optional `p matrix <n>` header, then n rows of n rationals.
RationalMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const RationalMatrix& m);

/// Graph format plus `modulus <N>`, `sign <s>`, `core <v>` and
/// `provenance <json>` trailers.
ReductionInstance parse_instance(std::string_view text);
std::string serialize_instance(const ReductionInstance& inst);

std::string read_file(const std::string& path);

std::string weight_to_string(const Weight& w);
Weight parse_weight(std::string_view text);

}  // namespace dichotomy
