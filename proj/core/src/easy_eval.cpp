#include "dichotomy/easy_eval.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "dichotomy/errors.hpp"
#include "parity_union_find.hpp"

namespace dichotomy {

FactoredPoly easy_factor(const Formula& f) {
  const auto n = f.num_vars();
  std::vector<std::vector<Width2Constraint>> decomposition(f.relations().size());
  std::vector<bool> used(f.relations().size(), false);
  for (const auto& c : f.constraints()) used[c.relation] = true;
  for (std::size_t r = 0; r < f.relations().size(); ++r) {
    if (!used[r]) continue;
    const auto& rel = f.relations()[r];
    if (!is_width2_expressible(rel))
      throw PreconditionError("relation '" + rel.name() + "' is not width-2 affine; the easy path does not apply");
    decomposition[r] = implied_width2_constraints(rel);
  }

  detail::ParityUnionFind uf(n);
  for (const auto& c : f.constraints()) {
    for (const auto& w : decomposition[c.relation]) {
      switch (w.kind) {
        case Width2Kind::Zero: uf.force(c.args[w.first], 0); break;
        case Width2Kind::One: uf.force(c.args[w.first], 1); break;
        case Width2Kind::Equal: uf.relate(c.args[w.first], c.args[w.second], 0); break;
        case Width2Kind::NotEqual: uf.relate(c.args[w.first], c.args[w.second], 1); break;
      }
    }
    if (!uf.consistent) return FactoredPoly{false, {}, {}};
  }

  // Variables are visited in increasing order, so the first member seen for
  // a root is the component's smallest variable.
  FactoredPoly out;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  std::vector<std::uint8_t> rep_parity(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::uint8_t p;
    auto root = uf.find(v, p);
    int forced = uf.forced_root_value(root);
    if (forced >= 0) {
      if ((forced ^ p) == 1) out.forced.push_back(v);
      continue;
    }
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.components.size();
      rep_parity[root] = p;
      out.components.push_back({v, {}, {}});
    }
    auto& comp = out.components[slot[root]];
    // value(v) = value(rep) ^ parity relative to the representative
    if ((p ^ rep_parity[root]) == 0)
      comp.one_branch.push_back(v);
    else
      comp.zero_branch.push_back(v);
  }
  return out;
}

Rational evaluate(const FactoredPoly& fp, std::span<const Rational> point) {
  if (!fp.consistent) return 0;
  auto product = [&](const Monomial& m) {
    Rational r = 1;
    for (auto v : m) {
      if (v >= point.size()) throw PreconditionError("point too short for the factored form");
      r *= point[v];
    }
    return r;
  };
  Rational value = product(fp.forced);
  for (const auto& c : fp.components) {
    if (value == 0) break;
    value *= product(c.zero_branch) + product(c.one_branch);
  }
  return value;
}

MultilinearPoly expand(const FactoredPoly& fp, std::size_t num_vars) {
  if (num_vars > kMaxEnumVars) throw BoundExceeded("expansion is limited to 30 variables");
  MultilinearPoly p(num_vars);
  if (!fp.consistent) return p;
  p = MultilinearPoly::monomial(num_vars, VarSet::from_indices(fp.forced));
  for (const auto& c : fp.components) {
    MultilinearPoly factor(num_vars);
    factor.add_term(VarSet::from_indices(c.zero_branch), 1);
    factor.add_term(VarSet::from_indices(c.one_branch), 1);
    p = p * factor;
  }
  return p;
}

Rational easy_evaluate(const Formula& f, std::span<const Rational> point) {
  if (point.size() != f.num_vars()) throw PreconditionError("point length does not match num_vars");
  return evaluate(easy_factor(f), point);
}

}  // namespace dichotomy
