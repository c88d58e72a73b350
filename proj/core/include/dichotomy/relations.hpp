#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dichotomy {

inline constexpr int kMaxRank = 16;

/// A Boolean relation of rank k, stored as its sorted set of accepted tuples.
/// Bit i of a tuple word is coordinate i+1; the textual bitstring "b1 b2 .. bk"
/// lists coordinates in order.
class Relation {
 public:
  using Tuple = std::uint32_t;

  /// Throws PreconditionError on a rank outside [1, 16], an out-of-range
  /// tuple or a duplicate tuple.
  Relation(std::string name, int rank, std::vector<Tuple> accepted);

  /// Relation accepting exactly the tuples for which `pred` holds.
  template <class Pred>
  static Relation from_predicate(std::string name, int rank, Pred pred) {
    std::vector<Tuple> acc;
    if (rank >= 1 && rank <= kMaxRank)
      for (Tuple t = 0; t < (Tuple{1} << rank); ++t)
        if (pred(t)) acc.push_back(t);
    return Relation(std::move(name), rank, std::move(acc));
  }

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  const std::vector<Tuple>& accepted() const { return accepted_; }
  bool accepts(Tuple t) const { return table_[t] != 0; }

  /// Same accepted set, regardless of name.
  bool same_tuples(const Relation& other) const {
    return rank_ == other.rank_ && accepted_ == other.accepted_;
  }

 private:
  std::string name_;
  int rank_;
  std::vector<Tuple> accepted_;
  std::vector<std::uint8_t> table_;
};

std::string tuple_to_bits(Relation::Tuple t, int rank);

enum class Width2Kind { Zero, One, Equal, NotEqual };

/// One of (x_i = 0), (x_i = 1), (x_i = x_j), (x_i != x_j). Coordinates are
/// 0-based; `second` is unused for the unary kinds.
struct Width2Constraint {
  Width2Kind kind;
  std::size_t first;
  std::size_t second = 0;

  bool operator==(const Width2Constraint&) const = default;
};

std::string to_string(const Width2Constraint& c);

bool is_affine(const Relation& r);

/// Every width-2 affine constraint over r's coordinates holding on all of
/// r's accepted tuples: unary constraints first, then pairs (i < j).
std::vector<Width2Constraint> implied_width2_constraints(const Relation& r);

/// True iff the conjunction of the implied width-2 constraints has exactly
/// r's accepted set as its solution set.
bool is_width2_expressible(const Relation& r);

enum class Verdict { Easy, Hard };
enum class WitnessKind { NonAffine, WideAffine };

struct Witness {
  WitnessKind kind;
  std::string relation;
};

struct Classification {
  Verdict verdict;
  std::optional<Witness> witness;
  /// For Easy: one entry per relation, in input order.
  std::vector<std::pair<std::string, std::vector<Width2Constraint>>> easy_decomposition;
};

/// Throws PreconditionError on an empty set.
Classification classify(std::span<const Relation> relations);

/// Built-in relations.
namespace rel {
Relation or0();      ///< x | y
Relation or1();      ///< !x | y   (x implies y)
Relation or2();      ///< !x | !y
Relation clause3();  ///< x | y | z
Relation never();    ///< F(x) = !x, the unary relation accepting only 0
Relation equal();    ///< x = y
Relation not_equal();///< x != y
Relation zero();     ///< x = 0
Relation one();      ///< x = 1
/// x_1 ^ ... ^ x_k = constant, named "xor<k>_<constant>".
Relation parity(int k, bool constant);

/// Resolves OR0, OR1, OR2, CLAUSE3, F, EQ, NEQ, ZERO, ONE and xor<k>_<c>.
std::optional<Relation> builtin(std::string_view name);
}  // namespace rel

}  // namespace dichotomy
