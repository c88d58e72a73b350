#include "dichotomy/poset_poly.hpp"

#include <algorithm>
#include <numeric>

#include "dichotomy/errors.hpp"

namespace dichotomy {

Poset::Poset(std::vector<Weight> weights, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : weights_(std::move(weights)), lt_(weights_.size() * weights_.size(), 0) {
  const auto n = size();
  for (const auto& [x, y] : pairs) {
    if (x >= n || y >= n) throw PreconditionError("poset relation refers to a missing element");
    lt_[x * n + y] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!lt_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (lt_[k * n + j]) lt_[i * n + j] = 1;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (lt_[i * n + i]) throw PreconditionError("poset relation contains a cycle");
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if (less(x, y)) out.emplace_back(x, y);
  return out;
}

void Poset::set_levels(std::vector<std::uint8_t> levels) {
  if (levels.size() != size()) throw PreconditionError("level vector size mismatch");
  for (const auto& [x, y] : strict_pairs())
    if (levels[x] != 0 || levels[y] != 1) throw PreconditionError("two-level poset needs every relation from V1 to V2");
  levels_ = std::move(levels);
}

Poset poset_from_bipartite(const WeightedGraph& g) {
  if (g.has_loops()) throw PreconditionError("poset construction requires a loop-free graph");
  auto sides = g.bipartition() ? g.bipartition() : two_coloring(g);
  if (!sides) throw PreconditionError("graph is not bipartite");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [u, v] : g.edges()) {
    if ((*sides)[u] == 0)
      pairs.emplace_back(u, v);
    else
      pairs.emplace_back(v, u);
  }
  Poset p(g.weights(), pairs);
  p.set_levels(*sides);
  return p;
}

bool is_antichain(const Poset& p, const VarSet& s) {
  auto idx = s.indices();
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] >= p.size()) return false;
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (p.comparable(idx[a], idx[b])) return false;
  }
  return true;
}

bool is_ideal(const Poset& p, const VarSet& s) {
  for (auto x : s.indices()) {
    if (x >= p.size()) return false;
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.less(y, x) && !s.contains(y)) return false;
  }
  return true;
}

namespace {

// Linear extension: elements sorted by the number of elements below them.
std::vector<std::size_t> linear_extension(const Poset& p) {
  std::vector<std::size_t> below(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.less(y, x)) ++below[x];
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] < below[b]; });
  return order;
}

// Depth-first over subsets (antichains or ideals), in a linear extension.
template <class Take, class Untake, class Leaf>
void enumerate_subsets(const Poset& p, bool ideals, Take&& take, Untake&& untake, Leaf&& leaf) {
  if (p.size() > kMaxEnumVertices)
    throw BoundExceeded("poset enumeration is limited to " + std::to_string(kMaxEnumVertices) + " elements");
  auto order = linear_extension(p);
  std::vector<char> in(p.size(), 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      leaf();
      return;
    }
    auto x = order[k];
    self(self, k + 1);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      auto y = order[i];
      if (ideals)
        ok = !(p.less(y, x) && !in[y]);
      else
        ok = !(in[y] && p.comparable(x, y));
    }
    if (!ok) return;
    in[x] = 1;
    take(x);
    self(self, k + 1);
    untake(x);
    in[x] = 0;
  };
  rec(rec, 0);
}

std::size_t symbol_space(const Poset& p) {
  std::size_t n = 0;
  for (const auto& w : p.weights())
    if (auto s = std::get_if<Symbol>(&w)) n = std::max(n, s->var + 1);
  return n;
}

MultilinearPoly subset_poly(const Poset& p, bool ideals) {
  MultilinearPoly out(symbol_space(p));
  struct Term {
    Rational coeff;
    VarSet mono;
  };
  std::vector<Term> stack{{Rational(1), {}}};
  enumerate_subsets(
      p, ideals,
      [&](std::size_t x) {
        Term t = stack.back();
        if (auto s = std::get_if<Symbol>(&p.weight(x))) {
          if (t.mono.contains(s->var)) throw PreconditionError("symbol used twice in a poset");
          t.mono.insert(s->var);
        } else {
          t.coeff *= std::get<Rational>(p.weight(x));
        }
        stack.push_back(std::move(t));
      },
      [&](std::size_t) { stack.pop_back(); }, [&] { out.add_term(stack.back().mono, stack.back().coeff); });
  return out;
}

BigInt subset_count(const Poset& p, bool ideals) {
  BigInt n = 0;
  enumerate_subsets(p, ideals, [](std::size_t) {}, [](std::size_t) {}, [&] { ++n; });
  return n;
}

}  // namespace

MultilinearPoly antichain_poly(const Poset& p) { return subset_poly(p, false); }
MultilinearPoly ideal_poly(const Poset& p) { return subset_poly(p, true); }
BigInt count_antichains(const Poset& p) { return subset_count(p, false); }
BigInt count_ideals(const Poset& p) { return subset_count(p, true); }

VarSet downward_closure(const Poset& p, const VarSet& antichain) {
  VarSet out = antichain;
  for (auto a : antichain.indices())
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.less(y, a)) out.insert(y);
  return out;
}

VarSet maximal_elements(const Poset& p, const VarSet& ideal) {
  VarSet out;
  auto idx = ideal.indices();
  for (auto x : idx)
    if (std::none_of(idx.begin(), idx.end(), [&](auto y) { return p.less(x, y); })) out.insert(x);
  return out;
}

VarSet weighted_bijection(const Poset& p, const VarSet& antichain) {
  if (!p.levels()) throw PreconditionError("weighted bijection needs a two-level poset");
  if (!is_antichain(p, antichain)) throw PreconditionError("input is not an antichain");
  VarSet out;
  const auto& levels = *p.levels();
  for (std::size_t x = 0; x < p.size(); ++x) {
    bool in = antichain.contains(x);
    if (levels[x] == 1 ? in : !in) out.insert(x);
  }
  return out;
}

MultilinearPoly subset_weight(const Poset& p, const VarSet& s) {
  MultilinearPoly out = MultilinearPoly::constant(symbol_space(p), 1);
  for (auto x : s.indices()) {
    const auto& w = p.weight(x);
    if (auto sym = std::get_if<Symbol>(&w))
      out = out * MultilinearPoly::variable(out.num_vars(), sym->var);
    else
      out = out.scaled(std::get<Rational>(w));
  }
  return out;
}

Formula or1_formula_of_poset(const Poset& p) {
  Formula f(p.size());
  auto r = f.add_relation(rel::or1());
  for (const auto& [lo, hi] : p.strict_pairs()) f.add_constraint(r, {hi, lo});
  return f;
}

}  // namespace dichotomy
