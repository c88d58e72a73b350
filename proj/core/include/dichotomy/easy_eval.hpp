#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dichotomy/formulas.hpp"
#include "dichotomy/polynomial.hpp"
#include "dichotomy/rational.hpp"

namespace dichotomy {

using Monomial = std::vector<std::size_t>;  ///< sorted 0-based variable indices

/// P(f) = forced * prod over components of (zero_branch + one_branch).
/// A component's representative is its smallest variable; the zero branch
/// is the monomial of members that are 1 when the representative is 0.
struct FactoredPoly {
  struct Component {
    std::size_t representative;
    Monomial zero_branch;
    Monomial one_branch;
  };

  bool consistent = true;
  Monomial forced;
  std::vector<Component> components;
};

/// Requires every relation used by f to be width-2 expressible; throws
/// PreconditionError otherwise.
FactoredPoly easy_factor(const Formula& f);

Rational evaluate(const FactoredPoly& fp, std::span<const Rational> point);

/// Throws BoundExceeded when more than kMaxEnumVars variables would be
/// expanded.
MultilinearPoly expand(const FactoredPoly& fp, std::size_t num_vars);

Rational easy_evaluate(const Formula& f, std::span<const Rational> point);

}  // namespace dichotomy
