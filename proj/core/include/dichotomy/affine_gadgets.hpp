#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dichotomy/formulas.hpp"
#include "dichotomy/matrix.hpp"
#include "dichotomy/rational.hpp"

namespace dichotomy {

/// x_{v1} ^ ... ^ x_{vk} = constant.
struct AffineConstraint {
  std::vector<std::size_t> vars;
  bool constant;

  bool operator==(const AffineConstraint&) const = default;
};

struct AffineFormula {
  std::size_t num_vars = 0;
  std::vector<AffineConstraint> constraints;

  bool operator==(const AffineFormula&) const = default;
};

/// Formula over the relations xor<k>_<c>.
Formula to_formula(const AffineFormula& f);

/// Every row and every column of the n x n matrix (variable i*n + j) has odd
/// parity.
AffineFormula build_phi_n(std::size_t n);

/// Degree-n homogeneous part of P(phi_n), evaluated at m. Requires n <= 3.
Rational permanent_via_hom(const RationalMatrix& m);

/// A rewritten formula whose new variables [old_num_vars, formula.num_vars)
/// are to be evaluated at aux_values (positional).
struct GadgetResult {
  AffineFormula formula;
  std::size_t old_num_vars;
  std::vector<int> aux_values;

  /// Appends the auxiliary values to a point over the original variables.
  std::vector<Rational> extend(std::span<const Rational> point) const;
};

/// Adds one shared variable a (the last one) to every constant-1 equation,
/// turning it into a constant-0 equation. The X_a-linear coefficient of the
/// output's polynomial is P(f).
struct ShiftResult {
  AffineFormula formula;
  std::size_t a;
};
ShiftResult shift_constants(const AffineFormula& f);

/// Splits each constant-0 equation of arity k >= 4 into the chain
/// (x1^x2^a1), (a1^x3^a2), ..., (a_{k-3}^x_{k-1}^x_k): k-2 equations, k-3
/// auxiliaries, evaluated at 1. Throws PreconditionError on a constant-1
/// equation.
GadgetResult chain_decompose(const AffineFormula& f);

/// Replaces each x^y^z=0 by (x^y^a=1) and (a^z^b=1) with fresh a, b per
/// equation, evaluated at a=1, b=0.
GadgetResult ternary0_to_ternary1(const AffineFormula& f);

/// Pads each ternary equation with k-3 fresh auxiliaries to arity k,
/// evaluated at 0. All equations must have the given constant.
GadgetResult pad_to_relation(const AffineFormula& f, std::size_t k, bool constant);

}  // namespace dichotomy
