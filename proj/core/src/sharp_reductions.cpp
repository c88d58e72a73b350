#include "dichotomy/sharp_reductions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <queue>
#include <unordered_map>

#include "dichotomy/errors.hpp"

namespace dichotomy {

BigInt ReductionInstance::recover(const BigInt& count) const {
  BigInt r = (sign * count) % modulus;
  if (r < 0) r += modulus;
  return r;
}

RationalMatrix perm_to_partial_perm(const RationalMatrix& a) {
  const auto n = a.size();
  for (const auto& x : a.data())
    if (x != 0 && x != 1) throw PreconditionError("perm_to_partial_perm expects a 0/1 matrix");
  RationalMatrix b(2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b(i, j) = a(i, j);
    b(i, n + i) = -1;
    b(n + i, i) = -1;
  }
  return b;
}

namespace {

bool is_unit_or_zero(const Weight& w) {
  if (is_symbol(w)) return false;
  const auto& q = std::get<Rational>(w);
  return q == 0 || q == 1 || q == -1;
}

bool is_zero_weight(const Weight& w) { return !is_symbol(w) && std::get<Rational>(w) == 0; }

void require_weights(const WeightedGraph& g, bool allow_zero, const char* what) {
  for (const auto& w : g.weights())
    if (!is_unit_or_zero(w) || (!allow_zero && is_zero_weight(w))) throw PreconditionError(what);
}

}  // namespace

WeightedGraph partial_perm_to_vc(const RationalMatrix& b) {
  for (const auto& x : b.data())
    if (x != 0 && x != 1 && x != -1) throw PreconditionError("partial_perm_to_vc expects entries in {0, 1, -1}");
  return incidence_transform(build_partial_perm_graph(b));
}

WeightedGraph eliminate_zero_weights(const WeightedGraph& g) {
  require_weights(g, true, "zero-weight elimination expects weights in {0, 1, -1}");
  const auto n = g.num_vertices();
  std::vector<std::size_t> index(n, SIZE_MAX);
  WeightedGraph out;
  for (std::size_t v = 0; v < n; ++v)
    if (!is_zero_weight(g.weight(v))) index[v] = out.add_vertex(g.weight(v));
  bool vanishes = false;
  for (const auto& [u, v] : g.edges()) {
    bool zu = index[u] == SIZE_MAX, zv = index[v] == SIZE_MAX;
    if (zu && zv)
      vanishes = true;
    else if (zu)
      out.add_edge(index[v], index[v]);
    else if (zv)
      out.add_edge(index[u], index[u]);
    else
      out.add_edge(index[u], index[v]);
  }
  if (vanishes) out.add_vertex(Rational(-1));
  return out;
}

SignedGraph eliminate_zero_weights_by_deletion(const WeightedGraph& g) {
  require_weights(g, true, "zero-weight elimination expects weights in {0, 1, -1}");
  const auto n = g.num_vertices();
  std::vector<char> removed(n, 0);
  int sign = 1;
  bool vanishes = false;
  for (const auto& [u, v] : g.edges())
    if (is_zero_weight(g.weight(u)) && is_zero_weight(g.weight(v))) vanishes = true;
  if (vanishes) {
    WeightedGraph zero;
    zero.add_vertex(Rational(-1));
    return {zero, 1};
  }
  auto take = [&](std::size_t u) {
    if (removed[u]) return;
    removed[u] = 1;
    if (std::get<Rational>(g.weight(u)) < 0) sign = -sign;
  };
  for (std::size_t v = 0; v < n; ++v)
    if (is_zero_weight(g.weight(v))) removed[v] = 1;
  for (const auto& [u, v] : g.edges()) {
    if (u == v) take(u);
    if (is_zero_weight(g.weight(u))) take(v);
    if (is_zero_weight(g.weight(v))) take(u);
  }
  std::vector<std::size_t> index(n, SIZE_MAX);
  WeightedGraph out;
  for (std::size_t v = 0; v < n; ++v)
    if (!removed[v]) index[v] = out.add_vertex(g.weight(v));
  for (const auto& [u, v] : g.edges())
    if (!removed[u] && !removed[v]) out.add_edge(index[u], index[v]);
  return {out, sign};
}

ReductionInstance simulate_neg_weights(const WeightedGraph& g) {
  require_weights(g, false, "weight simulation expects weights in {1, -1}");
  const auto v = g.num_vertices();
  ReductionInstance inst;
  inst.core_vertices = v;
  mpz_ui_pow_ui(inst.modulus.get_mpz_t(), 2, v);
  inst.modulus += 1;
  WeightedGraph h(v, Rational(1));
  for (const auto& [a, b] : g.edges()) h.add_edge(a, b);
  for (std::size_t u = 0; u < v; ++u) {
    if (std::get<Rational>(g.weight(u)) != -1) continue;
    for (std::size_t k = 0; k < v; ++k) h.add_edge(u, h.add_vertex(Rational(1)));
  }
  if (auto sides = two_coloring(h)) h.set_bipartition(std::move(*sides));
  inst.graph = std::move(h);
  return inst;
}

namespace {

// Counts vertex covers of induced subgraphs of a loop-free graph. Each live
// vertex carries the weight of being in (`in`) or out (`out`) of the cover.
class VertexCoverCounter {
 public:
  explicit VertexCoverCounter(const WeightedGraph& g) : adj_(g.adjacency()), pos_(g.num_vertices(), kNone) {}

  BigInt solve(std::vector<std::size_t> ids, std::vector<BigInt> in, std::vector<BigInt> out) {
    const auto n = ids.size();
    auto adj = induced(ids);

    // Fold isolated vertices and leaves into the running factor / neighbour.
    std::vector<std::size_t> deg(n);
    std::vector<char> alive(n, 1);
    std::queue<std::size_t> q;
    for (std::size_t i = 0; i < n; ++i) {
      deg[i] = adj[i].size();
      if (deg[i] <= 1) q.push(i);
    }
    BigInt factor = 1;
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      if (!alive[v]) continue;
      if (deg[v] == 0) {
        factor *= in[v] + out[v];
        alive[v] = 0;
      } else if (deg[v] == 1) {
        std::size_t u = SIZE_MAX;
        for (auto w : adj[v])
          if (alive[w]) u = w;
        in[u] *= in[v] + out[v];
        out[u] *= in[v];
        alive[v] = 0;
        if (--deg[u] <= 1) q.push(u);
      }
      if (factor == 0) return 0;
    }

    // Split the remainder into connected components.
    std::vector<int> comp(n, -1);
    BigInt result = factor;
    for (std::size_t s = 0; s < n; ++s) {
      if (!alive[s] || comp[s] >= 0) continue;
      std::vector<std::size_t> members{s};
      comp[s] = 1;
      for (std::size_t k = 0; k < members.size(); ++k)
        for (auto w : adj[members[k]])
          if (alive[w] && comp[w] < 0) {
            comp[w] = 1;
            members.push_back(w);
          }
      std::sort(members.begin(), members.end(), [&](auto a, auto b) { return ids[a] < ids[b]; });
      std::vector<std::size_t> sub_ids;
      std::vector<BigInt> sub_in, sub_out;
      for (auto m : members) {
        sub_ids.push_back(ids[m]);
        sub_in.push_back(in[m]);
        sub_out.push_back(out[m]);
      }
      result *= component(std::move(sub_ids), std::move(sub_in), std::move(sub_out));
      if (result == 0) return 0;
    }
    return result;
  }

 private:
  // Connected, every vertex of degree >= 2, ids sorted.
  BigInt component(std::vector<std::size_t> ids, std::vector<BigInt> in, std::vector<BigInt> out) {
    std::string key;
    for (std::size_t i = 0; i < ids.size(); ++i)
      key += std::to_string(ids[i]) + ':' + in[i].get_str(16) + ':' + out[i].get_str(16) + ';';
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    auto nbrs = induced(ids);
    std::size_t best = 0, best_deg = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (nbrs[i].size() > best_deg) {
        best_deg = nbrs[i].size();
        best = i;
      }
    }

    auto restrict = [&](const std::vector<char>& drop) {
      std::vector<std::size_t> r_ids;
      std::vector<BigInt> r_in, r_out;
      for (std::size_t i = 0; i < ids.size(); ++i)
        if (!drop[i]) {
          r_ids.push_back(ids[i]);
          r_in.push_back(in[i]);
          r_out.push_back(out[i]);
        }
      return solve(std::move(r_ids), std::move(r_in), std::move(r_out));
    };

    std::vector<char> drop(ids.size(), 0);
    drop[best] = 1;
    BigInt total = in[best] * restrict(drop);
    BigInt excluded = out[best];
    for (auto u : nbrs[best]) {
      drop[u] = 1;
      excluded *= in[u];
    }
    if (excluded != 0) total += excluded * restrict(drop);
    memo_.emplace(std::move(key), total);
    return total;
  }

  // Local adjacency of the subgraph induced by ids.
  std::vector<std::vector<std::size_t>> induced(const std::vector<std::size_t>& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) pos_[ids[i]] = i;
    std::vector<std::vector<std::size_t>> adj(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (auto u : adj_[ids[i]])
        if (pos_[u] != kNone) adj[i].push_back(pos_[u]);
    for (auto v : ids) pos_[v] = kNone;
    return adj;
  }

  static constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> pos_;
  std::unordered_map<std::string, BigInt> memo_;
};

}  // namespace

BigInt count_vertex_covers(const WeightedGraph& g) {
  VertexCoverCounter counter(g);
  std::vector<std::size_t> ids;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (!g.has_loop(v)) ids.push_back(v);
  std::vector<BigInt> in(ids.size(), BigInt(1)), out(ids.size(), BigInt(1));
  return counter.solve(std::move(ids), std::move(in), std::move(out));
}

// Complementation maps vertex covers onto independent sets, loops included.
BigInt count_independent_sets(const WeightedGraph& g) { return count_vertex_covers(g); }

namespace {

struct PipelineState {
  RationalMatrix matrix;
  WeightedGraph graph;
  int sign = 1;
  std::optional<ReductionInstance> instance;
};

void apply_step(PipelineState& s, const std::string& step) {
  if (step == "perm_to_partial_perm") {
    s.matrix = perm_to_partial_perm(s.matrix);
  } else if (step == "partial_perm_to_vc") {
    s.graph = partial_perm_to_vc(s.matrix);
  } else if (step == "bipartize") {
    s.graph = bipartize(s.graph);
  } else if (step == "eliminate_zero_weights") {
    s.graph = eliminate_zero_weights(s.graph);
  } else if (step == "eliminate_zero_weights_by_deletion") {
    auto r = eliminate_zero_weights_by_deletion(s.graph);
    s.graph = std::move(r.graph);
    s.sign *= r.sign;
  } else if (step == "simulate_neg_weights") {
    s.instance = simulate_neg_weights(s.graph);
    s.instance->sign = s.sign;
  } else {
    throw PreconditionError("unknown reduction step '" + step + "'");
  }
}

std::vector<std::string> pipeline_steps(bool bipartite) {
  if (bipartite)
    return {"perm_to_partial_perm", "partial_perm_to_vc", "bipartize", "eliminate_zero_weights_by_deletion",
            "simulate_neg_weights"};
  return {"perm_to_partial_perm", "partial_perm_to_vc", "eliminate_zero_weights", "simulate_neg_weights"};
}

}  // namespace

ReductionInstance replay(const Provenance& provenance) {
  PipelineState s;
  s.matrix = provenance.source;
  for (const auto& step : provenance.steps) apply_step(s, step);
  if (!s.instance) throw PreconditionError("provenance does not end in an unweighted instance");
  s.instance->provenance = provenance;
  return std::move(*s.instance);
}

ReductionInstance to_bipartite_vc(const WeightedGraph& g) {
  PipelineState s;
  s.graph = g;
  for (const auto* step : {"bipartize", "eliminate_zero_weights_by_deletion", "simulate_neg_weights"})
    apply_step(s, step);
  s.instance->provenance.steps = {"bipartize", "eliminate_zero_weights_by_deletion", "simulate_neg_weights"};
  return std::move(*s.instance);
}

ReductionInstance emit_instance(const RationalMatrix& a, bool bipartite) {
  for (const auto& x : a.data())
    if (x != 0 && x != 1) throw PreconditionError("emit_instance expects a 0/1 matrix");
  return replay(Provenance{a, pipeline_steps(bipartite)});
}

BigInt perm_via_vc(const RationalMatrix& a, bool bipartite) {
  auto inst = emit_instance(a, bipartite);
  return inst.recover(count_vertex_covers(inst.graph));
}

Formula vc_to_positive2sat(const WeightedGraph& g) {
  Formula f(g.num_vertices());
  auto r = f.add_relation(rel::or0());
  for (const auto& [u, v] : g.edges()) f.add_constraint(r, {u, v});
  return f;
}

Formula is_to_negative2sat(const WeightedGraph& g) {
  Formula f(g.num_vertices());
  auto r = f.add_relation(rel::or2());
  for (const auto& [u, v] : g.edges()) f.add_constraint(r, {u, v});
  return f;
}

Formula ideal_to_implicative2sat(const Poset& p) { return or1_formula_of_poset(p); }

}  // namespace dichotomy
