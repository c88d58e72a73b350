#include "dichotomy/graph_poly.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "dichotomy/errors.hpp"

namespace dichotomy {

SymbolicMatrix symbolic_matrix(std::size_t n) {
  SymbolicMatrix m(n, Weight{Rational(0)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Symbol{i * n + j};
  return m;
}

WeightedGraph::WeightedGraph(std::size_t n, const Weight& w) : weights_(n, w) {}

std::size_t WeightedGraph::add_vertex(const Weight& w) {
  weights_.push_back(w);
  if (sides_) sides_.reset();
  return weights_.size() - 1;
}

void WeightedGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= num_vertices() || v >= num_vertices()) throw PreconditionError("edge endpoint out of range");
  if (u > v) std::swap(u, v);
  if (sides_ && u != v && (*sides_)[u] == (*sides_)[v]) sides_.reset();
  edges_.emplace(u, v);
}

bool WeightedGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return edges_.count({u, v}) != 0;
}

bool WeightedGraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.first == e.second; });
}

bool WeightedGraph::is_numeric() const {
  return std::none_of(weights_.begin(), weights_.end(), is_symbol);
}

std::size_t WeightedGraph::symbol_space() const {
  std::size_t n = 0;
  for (const auto& w : weights_)
    if (auto s = std::get_if<Symbol>(&w)) n = std::max(n, s->var + 1);
  return n;
}

std::vector<std::vector<std::size_t>> WeightedGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(num_vertices());
  for (const auto& [u, v] : edges_) {
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

void WeightedGraph::set_bipartition(std::vector<std::uint8_t> sides) {
  if (sides.size() != num_vertices()) throw PreconditionError("bipartition size mismatch");
  for (const auto& [u, v] : edges_)
    if (u != v && sides[u] == sides[v]) throw PreconditionError("bipartition violated by an edge");
  sides_ = std::move(sides);
}

std::optional<std::vector<std::uint8_t>> two_coloring(const WeightedGraph& g) {
  if (g.has_loops()) return std::nullopt;
  auto adj = g.adjacency();
  std::vector<int> color(g.num_vertices(), -1);
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto v : adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return std::vector<std::uint8_t>(color.begin(), color.end());
}

namespace {

void check_unique_symbols(const std::vector<Weight>& weights) {
  VarSet seen;
  for (const auto& w : weights)
    if (auto s = std::get_if<Symbol>(&w)) {
      if (seen.contains(s->var)) throw PreconditionError("symbol X" + std::to_string(s->var + 1) + " is used twice");
      seen.insert(s->var);
    }
}

// Running product of chosen weights: a coefficient and a monomial.
struct Term {
  Rational coeff;
  VarSet mono;
};

Term times(const Term& t, const Weight& w) {
  Term out = t;
  if (auto s = std::get_if<Symbol>(&w))
    out.mono.insert(s->var);
  else
    out.coeff *= std::get<Rational>(w);
  return out;
}

Rational numeric(const Weight& w, std::span<const Rational> point) {
  if (auto s = std::get_if<Symbol>(&w)) {
    if (s->var >= point.size()) throw PreconditionError("no value supplied for symbol X" + std::to_string(s->var + 1));
    return point[s->var];
  }
  return std::get<Rational>(w);
}

// Depth-first over vertices in index order; a vertex's decision is checked
// against its already decided neighbours. `cover` selects vertex covers,
// otherwise independent sets. take(v) / untake(v) bracket the branch where
// v is chosen; leaf() fires for each valid set.
template <class Take, class Untake, class Leaf>
void enumerate_sets(const WeightedGraph& g, bool cover, Take&& take, Untake&& untake, Leaf&& leaf) {
  const auto n = g.num_vertices();
  if (n > kMaxEnumVertices)
    throw BoundExceeded("graph enumeration is limited to " + std::to_string(kMaxEnumVertices) + " vertices");
  std::vector<std::vector<std::size_t>> earlier(n);
  for (const auto& [u, v] : g.edges())
    if (u != v) earlier[v].push_back(u);
  std::vector<char> in(n, 0);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      leaf();
      return;
    }
    const bool loop = g.has_loop(v);
    // out
    bool ok_out = cover ? !loop : true;
    if (ok_out && cover)
      for (auto u : earlier[v])
        if (!in[u]) {
          ok_out = false;
          break;
        }
    if (ok_out) self(self, v + 1);
    // in
    bool ok_in = cover ? true : !loop;
    if (ok_in && !cover)
      for (auto u : earlier[v])
        if (in[u]) {
          ok_in = false;
          break;
        }
    if (ok_in) {
      in[v] = 1;
      take(v);
      self(self, v + 1);
      untake(v);
      in[v] = 0;
    }
  };
  rec(rec, 0);
}

MultilinearPoly set_poly(const WeightedGraph& g, bool cover) {
  check_unique_symbols(g.weights());
  MultilinearPoly p(g.symbol_space());
  std::vector<Term> stack{{Rational(1), {}}};
  enumerate_sets(
      g, cover, [&](std::size_t v) { stack.push_back(times(stack.back(), g.weight(v))); },
      [&](std::size_t) { stack.pop_back(); }, [&] { p.add_term(stack.back().mono, stack.back().coeff); });
  return p;
}

Rational set_value(const WeightedGraph& g, bool cover, std::span<const Rational> point) {
  std::vector<Rational> w(g.num_vertices());
  for (std::size_t v = 0; v < w.size(); ++v) w[v] = numeric(g.weight(v), point);
  Rational sum = 0;
  std::vector<Rational> stack{Rational(1)};
  enumerate_sets(
      g, cover, [&](std::size_t v) { stack.push_back(stack.back() * w[v]); }, [&](std::size_t) { stack.pop_back(); },
      [&] { sum += stack.back(); });
  return sum;
}

}  // namespace

Rational partial_permanent(const RationalMatrix& m) {
  const auto n = m.size();
  if (n > 8) throw BoundExceeded("numeric partial permanent is limited to n <= 8");
  // dp[mask]: weighted count of partial maps of the rows so far whose image
  // is exactly `mask`.
  std::vector<Rational> dp(std::size_t{1} << n, Rational(0));
  dp[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> next = dp;
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
      if (dp[mask] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!((mask >> j) & 1u) && m(i, j) != 0) next[mask | (std::size_t{1} << j)] += dp[mask] * m(i, j);
    }
    dp = std::move(next);
  }
  Rational sum = 0;
  for (const auto& v : dp) sum += v;
  return sum;
}

namespace {

std::size_t matrix_symbol_space(const SymbolicMatrix& m) {
  std::size_t n = 0;
  for (const auto& w : m.data())
    if (auto s = std::get_if<Symbol>(&w)) n = std::max(n, s->var + 1);
  return n;
}

// Expands sum over (partial) injective maps row -> column of the product of
// selected entries.
MultilinearPoly expand_maps(const SymbolicMatrix& m, bool partial) {
  check_unique_symbols(m.data());
  const auto n = m.size();
  MultilinearPoly p(matrix_symbol_space(m));
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, std::size_t row, const Term& t) -> void {
    if (t.coeff == 0) return;
    if (row == n) {
      p.add_term(t.mono, t.coeff);
      return;
    }
    if (partial) self(self, row + 1, t);
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      self(self, row + 1, times(t, m(row, j)));
      used[j] = 0;
    }
  };
  rec(rec, 0, Term{Rational(1), {}});
  return p;
}

}  // namespace

MultilinearPoly partial_permanent(const SymbolicMatrix& m) {
  if (m.size() > 6) throw BoundExceeded("symbolic partial permanent is limited to n <= 6");
  return expand_maps(m, true);
}

Rational permanent(const RationalMatrix& m) {
  const auto n = m.size();
  if (n > 10) throw BoundExceeded("permanent is limited to n <= 10");
  if (n == 0) return 1;
  // Ryser: per(M) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} M(i, j),
  // visiting column subsets in Gray-code order.
  std::vector<Rational> row_sums(n, Rational(0));
  Rational total = 0;
  std::size_t subset = 0;
  for (std::size_t k = 1; k < (std::size_t{1} << n); ++k) {
    std::size_t gray = k ^ (k >> 1);
    std::size_t flipped = gray ^ subset;
    std::size_t j = static_cast<std::size_t>(std::countr_zero(flipped));
    bool added = (gray >> j) & 1u;
    for (std::size_t i = 0; i < n; ++i) {
      if (added)
        row_sums[i] += m(i, j);
      else
        row_sums[i] -= m(i, j);
    }
    subset = gray;
    Rational prod = 1;
    for (const auto& s : row_sums) {
      prod *= s;
      if (prod == 0) break;
    }
    if (std::popcount(gray) % 2)
      total -= prod;
    else
      total += prod;
  }
  return n % 2 ? -total : total;
}

MultilinearPoly permanent(const SymbolicMatrix& m) {
  if (m.size() > 8) throw BoundExceeded("symbolic permanent is limited to n <= 8");
  return expand_maps(m, false);
}

WeightedGraph build_partial_perm_graph(std::size_t n) {
  if (n < 1) throw PreconditionError("partial permanent graph needs n >= 1");
  WeightedGraph g;
  for (std::size_t c = 0; c < n * n; ++c) g.add_vertex(Symbol{c});
  for (std::size_t a = 0; a < n * n; ++a)
    for (std::size_t b = a + 1; b < n * n; ++b)
      if (a / n == b / n || a % n == b % n) g.add_edge(a, b);
  return g;
}

WeightedGraph build_partial_perm_graph(const RationalMatrix& m) {
  auto g = build_partial_perm_graph(m.size());
  for (std::size_t c = 0; c < g.num_vertices(); ++c) g.set_weight(c, m.data()[c]);
  return g;
}

MultilinearPoly ip(const WeightedGraph& g) { return set_poly(g, false); }
MultilinearPoly vcp(const WeightedGraph& g) { return set_poly(g, true); }

Rational ip_value(const WeightedGraph& g, std::span<const Rational> point) { return set_value(g, false, point); }
Rational vcp_value(const WeightedGraph& g, std::span<const Rational> point) { return set_value(g, true, point); }

WeightedGraph incidence_transform(const WeightedGraph& g) {
  if (g.has_loops()) throw PreconditionError("incidence transform requires a loop-free graph");
  WeightedGraph out;
  for (const auto& w : g.weights()) out.add_vertex(w);
  for (const auto& [u, v] : g.edges()) {
    auto e = out.add_vertex(Rational(-1));
    out.add_edge(u, e);
    out.add_edge(v, e);
  }
  std::vector<std::uint8_t> sides(out.num_vertices(), 0);
  std::fill(sides.begin(), sides.begin() + static_cast<long>(g.num_vertices()), 1);
  out.set_bipartition(std::move(sides));
  return out;
}

WeightedGraph bipartize(const WeightedGraph& g) { return incidence_transform(incidence_transform(g)); }

Formula or0_formula_of_graph(const WeightedGraph& g) {
  if (g.has_loops()) throw PreconditionError("OR0 encoding requires a loop-free graph");
  Formula f(g.num_vertices());
  auto r = f.add_relation(rel::or0());
  for (const auto& [u, v] : g.edges()) f.add_constraint(r, {u, v});
  return f;
}

Formula or2_formula_partial_perm(std::size_t n) {
  Formula f(n * n);
  auto r = f.add_relation(rel::or2());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) f.add_constraint(r, {i * n + j, i * n + k});
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k) f.add_constraint(r, {i * n + j, k * n + j});
  return f;
}

}  // namespace dichotomy
