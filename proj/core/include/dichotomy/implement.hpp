#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dichotomy/formulas.hpp"
#include "dichotomy/relations.hpp"

namespace dichotomy {

/// A gadget for `target`: constraints over the target's function variables
/// 0..rank-1 followed by auxiliary variables rank..rank+num_aux-1.
struct Implementation {
  Relation target;
  Formula constraints;

  std::size_t num_function_vars() const { return static_cast<std::size_t>(target.rank()); }
  std::size_t num_aux() const { return constraints.num_vars() - num_function_vars(); }
  std::size_t alpha() const { return constraints.constraints().size(); }

  /// target(x_1..x_k) as its own single-constraint implementation.
  static Implementation identity(const Relation& target);
};

inline constexpr std::size_t kMaxImplementationVars = 24;

/// Per function-variable assignment: whether the target accepts it, how many
/// auxiliary assignments satisfy every constraint, and the largest number of
/// constraints any auxiliary assignment satisfies.
struct CertificateRow {
  Relation::Tuple x;
  bool target_accepts;
  std::size_t full_extensions;
  std::size_t max_satisfied;
  bool ok;
};

struct Certificate {
  bool perfect_faithful;
  std::vector<CertificateRow> rows;
};

/// Throws BoundExceeded above kMaxImplementationVars variables.
Certificate certify(const Implementation& impl);
bool check_perfect_faithful(const Implementation& impl);

struct SearchBounds {
  std::size_t max_aux = 3;
  std::size_t max_constraints = 4;
  std::size_t max_vars = 10;
};

/// Bounded exhaustive search. Candidates are visited by increasing number of
/// auxiliaries, then of constraints, then lexicographically over sorted
/// constraint multisets (relation index, argument tuple); the first success
/// is returned. nullopt means the bounded space holds no implementation.
std::optional<Implementation> search_implementation(const Relation& target,
                                                    const std::vector<Relation>& available,
                                                    const SearchBounds& bounds = {});

using ImplementationTable = std::map<std::string, Implementation>;

/// Replaces each constraint by its implementation, with fresh auxiliaries
/// appended after f's variables in constraint order. Throws
/// PreconditionError when a relation has no entry.
Formula substitute(const Formula& f, const ImplementationTable& table);

struct FalseElimination {
  Formula formula;
  std::vector<std::size_t> zero_set;  ///< sorted, unique
};

/// Drops every constraint whose relation accepts exactly {0} at rank 1,
/// recording its variable; those variables are to be evaluated at 0.
FalseElimination eliminate_false(const Formula& f);

}  // namespace dichotomy
