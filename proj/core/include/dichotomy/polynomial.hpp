#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dichotomy/rational.hpp"
#include "dichotomy/var_set.hpp"

namespace dichotomy {

/// Sparse multilinear polynomial with exact rational coefficients. A term is
/// a variable subset (the monomial) mapped to its nonzero coefficient.
class MultilinearPoly {
 public:
  using TermMap = std::map<VarSet, Rational>;

  explicit MultilinearPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MultilinearPoly constant(std::size_t num_vars, const Rational& c);
  static MultilinearPoly variable(std::size_t num_vars, std::size_t index);
  static MultilinearPoly monomial(std::size_t num_vars, VarSet vars, const Rational& c = 1);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;

  /// Coefficient of the given monomial (zero if absent).
  Rational coefficient(const VarSet& monomial) const;

  /// Adds c * X^monomial in place.
  void add_term(const VarSet& monomial, const Rational& c);

  /// Same polynomial over a larger variable space.
  MultilinearPoly widened(std::size_t num_vars) const;

  Rational evaluate(std::span<const Rational> point) const;

  MultilinearPoly operator+(const MultilinearPoly& other) const;
  MultilinearPoly operator-(const MultilinearPoly& other) const;
  /// Throws PreconditionError when the factors share a variable.
  MultilinearPoly operator*(const MultilinearPoly& other) const;
  MultilinearPoly scaled(const Rational& c) const;

  bool operator==(const MultilinearPoly& other) const {
    return num_vars_ == other.num_vars_ && terms_ == other.terms_;
  }

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

/// A polynomial accessible only through evaluation. Must be a pure function.
using Evaluator = std::function<Rational(std::span<const Rational>)>;

Evaluator as_evaluator(MultilinearPoly p);

/// Evaluator of the degree-`delta` homogeneous part of a polynomial of total
/// degree at most `degree_bound`, by interpolating t -> f(t*x) at the nodes
/// t = 0..degree_bound.
Evaluator homogeneous_component(Evaluator f, std::size_t num_vars, std::size_t degree_bound,
                                std::size_t delta);

/// Evaluator of the coefficient of X_var in f, for f multilinear in X_var:
/// f|_{X_var=1} - f|_{X_var=0}.
Evaluator linear_coefficient(Evaluator f, std::size_t var);

/// One term per line, `<coeff> : <1-based indices>`, graded lexicographic
/// order. The zero polynomial serializes to the empty string.
std::string serialize(const MultilinearPoly& p);
MultilinearPoly parse_polynomial(std::string_view text, std::size_t num_vars);

/// Human-readable form, e.g. "1 + X1 + X1*X2" (1-based indices).
std::string to_display(const MultilinearPoly& p);

}  // namespace dichotomy
