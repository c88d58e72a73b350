#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dichotomy/polynomial.hpp"
#include "dichotomy/rational.hpp"
#include "dichotomy/relations.hpp"

namespace dichotomy {

inline constexpr std::size_t kMaxEnumVars = 30;

/// One relation application. Arguments are 0-based variable indices and may
/// repeat.
struct Constraint {
  std::size_t relation;
  std::vector<std::size_t> args;

  bool operator==(const Constraint&) const = default;
};

/// A conjunction of relation applications over variables 0..num_vars-1. The
/// relation table is the set S in scope; constraints refer to it by index.
class Formula {
 public:
  explicit Formula(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Relation& relation_of(const Constraint& c) const { return relations_[c.relation]; }

  /// Adds r to the table unless a relation of the same name exists; returns
  /// its index. Throws PreconditionError if the name exists with other tuples.
  std::size_t add_relation(const Relation& r);
  /// Index of the named relation, if present.
  std::optional<std::size_t> find_relation(std::string_view name) const;

  /// Throws PreconditionError on an arity mismatch or out-of-range argument.
  void add_constraint(std::size_t relation, std::vector<std::size_t> args);
  void add_constraint(const Relation& r, std::vector<std::size_t> args) {
    add_constraint(add_relation(r), std::move(args));
  }

  /// Appends `count` fresh variables; returns the index of the first.
  std::size_t add_variables(std::size_t count);

  /// The relations actually referenced by some constraint, in table order.
  std::vector<Relation> used_relations() const;

  /// Satisfaction of the constraint on an assignment packed into a mask
  /// (bit i = variable i); requires num_vars <= 64.
  bool satisfies(const Constraint& c, std::uint64_t assignment) const;

  bool operator==(const Formula&) const;

 private:
  std::size_t num_vars_;
  std::vector<Relation> relations_;
  std::vector<Constraint> constraints_;
};

/// Throws PreconditionError on a length mismatch.
bool eval_assignment(const Formula& f, std::span<const bool> assignment);
bool eval_assignment(const Formula& f, const std::vector<bool>& assignment);

/// Calls visit(mask) for each satisfying assignment, in increasing mask
/// order. Throws BoundExceeded above kMaxEnumVars variables.
void for_each_satisfying(const Formula& f, const std::function<void(std::uint64_t)>& visit);

BigInt count_sat(const Formula& f);

/// Sum over satisfying assignments e of X^e.
MultilinearPoly poly_of_formula(const Formula& f);

/// P(f) at `point` without materializing monomials.
Rational eval_formula_poly(const Formula& f, std::span<const Rational> point);

}  // namespace dichotomy
