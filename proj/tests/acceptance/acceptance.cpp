// Acceptance criteria 1-10. Each prints one PASS/FAIL line with its elapsed
// time and pinned limit; the process exits nonzero if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "../oracles.hpp"
#include "dichotomy/affine_gadgets.hpp"
#include "dichotomy/easy_eval.hpp"
#include "dichotomy/implement.hpp"
#include "dichotomy/sharp_reductions.hpp"

using namespace dichotomy;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2024;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<Weight> symbols(std::size_t n) {
  std::vector<Weight> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(Symbol{i});
  return w;
}

RationalMatrix bits_matrix(std::size_t n, std::uint32_t bits) {
  RationalMatrix m(n, Rational(0));
  for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = (bits >> k) & 1;
  return m;
}

oracle::Poly scaled(oracle::Poly p, const Rational& c) {
  oracle::Poly out;
  for (auto& [m, v] : p) oracle::add(out, m, v * c);
  return out;
}

// 1. Classifier catalog.
void criterion_classifier(Outcome& o) {
  std::vector<Relation> easy{rel::zero(), rel::one(), rel::equal(), rel::not_equal()};
  for (const auto& r : easy) o.expect(oracle::affine(r) && oracle::width2(r), "oracle: " + r.name() + " width-2");
  o.expect(classify(easy).verdict == Verdict::Easy, "width-2 catalog is easy");
  std::vector<std::pair<Relation, WitnessKind>> hard{
      {rel::or0(), WitnessKind::NonAffine},          {rel::or1(), WitnessKind::NonAffine},
      {rel::or2(), WitnessKind::NonAffine},          {rel::clause3(), WitnessKind::NonAffine},
      {rel::parity(3, false), WitnessKind::WideAffine}, {rel::parity(3, true), WitnessKind::WideAffine}};
  for (const auto& [r, kind] : hard) {
    bool oracle_nonaffine = !oracle::affine(r);
    bool oracle_wide = oracle::affine(r) && !oracle::width2(r);
    o.expect(oracle_nonaffine == (kind == WitnessKind::NonAffine) && (oracle_nonaffine || oracle_wide),
             "oracle disagrees on " + r.name());
    std::vector<Relation> s{r};
    auto c = classify(s);
    o.expect(c.verdict == Verdict::Hard && c.witness && c.witness->kind == kind && c.witness->relation == r.name(),
             "classify {" + r.name() + "}");
  }
}

// 2. Easy path against enumeration, plus a 10^5-variable instance.
void criterion_easy(Outcome& o) {
  std::mt19937_64 rng(kSeed + 2);
  std::vector<Relation> pool{rel::zero(), rel::one(), rel::equal(), rel::not_equal(),
                             Relation("w", 3, {0b010, 0b111}), Relation("v", 3, {0b000, 0b011, 0b100, 0b111})};
  for (int trial = 0; trial < 1000; ++trial) {
    auto n = 1 + rng() % 20;
    Formula f(n);
    for (std::size_t c = 0, m = rng() % 16; c < m; ++c) {
      const auto& r = pool[rng() % pool.size()];
      std::vector<std::size_t> args;
      for (int i = 0; i < r.rank(); ++i) args.push_back(rng() % n);
      f.add_constraint(r, args);
    }
    auto x = oracle::random_point(rng, n);
    auto got = easy_evaluate(f, x);
    o.expect(got == eval_formula_poly(f, x), "easy_evaluate != eval_formula_poly");
    if (n <= 12) o.expect(got == oracle::formula_value(f, x), "easy_evaluate != brute force");
  }

  // Chain of EQ/NEQ over 10^5 variables: exactly two satisfying assignments.
  const std::size_t n = 100000;
  Formula f(n);
  std::vector<bool> bit(n, false);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool differ = rng() % 2;
    f.add_constraint(differ ? rel::not_equal() : rel::equal(), {i, i + 1});
    bit[i + 1] = bit[i] != differ;
  }
  std::vector<Rational> x(n);
  for (auto& q : x) q = Rational(1 + static_cast<long>(rng() % 3), 1 + static_cast<long>(rng() % 3));
  Rational zero_side = 1, one_side = 1;
  for (std::size_t i = 0; i < n; ++i) (bit[i] ? zero_side : one_side) *= x[i];
  auto t0 = Clock::now();
  auto got = easy_evaluate(f, x);
  double elapsed = seconds_since(t0);
  o.expect(got == zero_side + one_side, "10^5-variable chain value");
  char buf[96];
  std::snprintf(buf, sizeof buf, "10^5-variable instance %.3fs (limit 1s)", elapsed);
  o.expect(elapsed < 1.0, buf);
  if (o.ok) o.detail = buf;
}

// 3. IP(G'_n) equals the symbolic partial permanent.
void criterion_partial_perm_graph(Outcome& o) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto g = build_partial_perm_graph(n);
    auto want = oracle::partial_permanent_poly(n);
    o.expect(oracle::to_poly(ip(g)) == want, "ip(G'_n) vs oracle, n=" + std::to_string(n));
    o.expect(ip(g) == partial_permanent(symbolic_matrix(n)), "ip(G'_n) vs partial_permanent, n=" + std::to_string(n));
    o.expect(oracle::graph_poly(g, false) == want, "oracle IP vs oracle PER*, n=" + std::to_string(n));
  }
}

// 4. Incidence exchange, exhaustively over loop-free graphs on <= 5 vertices.
void criterion_incidence(Outcome& o) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t sub = 0; sub < (1u << pairs.size()); ++sub) {
      WeightedGraph g(0);
      for (std::size_t v = 0; v < n; ++v) g.add_vertex(Symbol{v});
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((sub >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
      const Rational sign = g.num_edges() % 2 ? -1 : 1;
      auto h = incidence_transform(g);
      o.expect(oracle::to_poly(vcp(h)) == scaled(oracle::graph_poly(g, false), sign), "VCP(inc G) = (-1)^e IP(G)");
      o.expect(oracle::to_poly(ip(h)) == oracle::graph_poly(g, true), "IP(inc G) = VCP(G)");
    }
  }
  o.detail = "dual checked in its sign-free form IP(inc G) = VCP(G)";
}

// 5. Reciprocity.
void criterion_reciprocity(Outcome& o) {
  std::mt19937_64 rng(kSeed + 5);
  for (int gi = 0; gi < 20; ++gi) {
    auto g = oracle::random_graph(rng, 1 + rng() % 10, 0.35);
    for (int pi = 0; pi < 50; ++pi) {
      std::vector<Rational> x, inv;
      Rational prod = 1;
      for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        x.push_back(oracle::random_nonzero_rational(rng));
        inv.push_back(1 / x.back());
        prod *= x.back();
      }
      auto lhs = ip_value(g, x);
      o.expect(lhs == oracle::ip_value(g, x), "ip_value vs oracle");
      o.expect(lhs == prod * vcp_value(g, inv), "IP(x) = prod(x) VCP(1/x)");
      o.expect(lhs == prod * oracle::vcp_value(g, inv), "oracle reciprocity");
    }
  }
}

// 6. Posets from bipartite graphs, antichain/ideal counts, AP = IPP.
void criterion_posets(Outcome& o) {
  std::mt19937_64 rng(kSeed + 6);
  for (int trial = 0; trial < 20; ++trial) {
    auto n = 2 + rng() % 11;
    WeightedGraph g(0);
    for (std::size_t v = 0; v < n; ++v) g.add_vertex(Symbol{v});
    std::vector<int> side(n);
    for (auto& s : side) s = rng() % 2;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (side[u] != side[v] && rng() % 3 == 0) g.add_edge(u, v);
    o.expect(oracle::to_poly(antichain_poly(poset_from_bipartite(g))) == oracle::graph_poly(g, false),
             "AP(poset(G)) = IP(G)");
  }
  for (int trial = 0; trial < 50; ++trial) {
    auto n = 1 + rng() % 10;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 4 == 0) pairs.emplace_back(perm[i], perm[j]);
    Poset p(symbols(n), pairs);
    oracle::PosetOracle ref(n, pairs);
    auto a = count_antichains(p);
    o.expect(a == count_ideals(p) && a == ref.count(false) && a == ref.count(true), "#antichains = #ideals");
  }
  // All base graphs on <= 4 vertices with <= 4 edges.
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t sub = 0; sub < (1u << pairs.size()); ++sub) {
      if (std::popcount(sub) > 4) continue;
      WeightedGraph g(0);
      for (std::size_t v = 0; v < n; ++v) g.add_vertex(Symbol{v});
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((sub >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
      auto b = bipartize(g);
      auto p = poset_from_bipartite(b);
      oracle::PosetOracle ref(p.size(), p.strict_pairs());
      auto ap = ref.poly(false, p.weights());
      o.expect(ap == ref.poly(true, p.weights()), "oracle AP = IPP on bipartize image");
      o.expect(oracle::to_poly(antichain_poly(p)) == ap && oracle::to_poly(ideal_poly(p)) == ap,
               "AP = IPP on bipartize image");
    }
  }
}

// Brute-force perfect-and-faithful check.
bool oracle_perfect_faithful(const Implementation& impl) {
  const auto& f = impl.constraints;
  const auto k = impl.num_function_vars();
  const auto aux = f.num_vars() - k;
  const auto alpha = f.constraints().size();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
    std::size_t full = 0, best = 0;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << aux); ++y) {
      auto mask = x | (y << k);
      std::size_t sat = 0;
      for (const auto& c : f.constraints()) sat += oracle::relation_holds(f.relation_of(c), c.args, mask);
      best = std::max(best, sat);
      full += sat == alpha;
    }
    bool accepts = oracle::relation_holds(impl.target, [&] {
      std::vector<std::size_t> id(k);
      std::iota(id.begin(), id.end(), 0);
      return id;
    }(), x);
    if (accepts ? full != 1 : best + 1 > alpha) return false;
  }
  return true;
}

// 7. Implementations and substitution.
void criterion_implement(Outcome& o) {
  auto found = search_implementation(rel::or0(), {rel::clause3(), rel::never()});
  o.expect(found.has_value(), "search found an implementation");
  if (!found) return;
  o.expect(check_perfect_faithful(*found), "check_perfect_faithful");
  o.expect(oracle_perfect_faithful(*found), "oracle perfect-faithful check");

  Formula hand(3);
  hand.add_constraint(rel::clause3(), {0, 1, 2});
  hand.add_constraint(rel::never(), {2});
  Implementation gadget{rel::or0(), hand};
  o.expect(check_perfect_faithful(gadget) && oracle_perfect_faithful(gadget), "auxiliary gadget certified");

  std::mt19937_64 rng(kSeed + 7);
  for (const auto* impl : {&*found, &gadget}) {
    ImplementationTable table{{"OR0", *impl}};
    for (int trial = 0; trial < 100; ++trial) {
      auto n = 2 + rng() % 5;
      Formula phi(n);
      for (std::size_t c = 0, m = rng() % 5; c < m; ++c) phi.add_constraint(rel::or0(), {rng() % n, rng() % n});
      auto psi = substitute(phi, table);
      auto x = oracle::random_point(rng, n);
      auto y = x;
      y.resize(psi.num_vars(), Rational(1));
      o.expect(oracle::formula_value(psi, y) == oracle::formula_value(phi, x), "P(phi)(x) = P(psi)(x, 1..1)");
    }
  }
}

// 8. Permanent from the homogeneous component, and the gadget route.
void criterion_affine(Outcome& o) {
  std::mt19937_64 rng(kSeed + 8);
  for (int trial = 0; trial < 50; ++trial) {
    auto n = 1 + trial % 3;
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = static_cast<long>(rng() % 7) - 3;
    o.expect(permanent_via_hom(m) == oracle::permanent(m), "permanent_via_hom = permanent");
  }
  auto phi = build_phi_n(2);
  for (bool constant : {true, false}) {
    // shift -> chain -> [ternary flip] -> pad; every constraint becomes xor4_<constant>.
    auto shifted = shift_constants(phi);
    std::vector<GadgetResult> steps{chain_decompose(shifted.formula)};
    if (constant) steps.push_back(ternary0_to_ternary1(steps.back().formula));
    steps.push_back(pad_to_relation(steps.back().formula, 4, constant));
    auto final_formula = to_formula(steps.back().formula);
    o.expect(final_formula.used_relations().size() == 1 &&
                 final_formula.used_relations()[0].same_tuples(rel::parity(4, constant)),
             "route uses a single relation");
    Evaluator q = [&](std::span<const Rational> x) {
      std::vector<Rational> y(x.begin(), x.end());
      for (const auto& s : steps) y = s.extend(y);
      return oracle::formula_value(final_formula, y);
    };
    auto coeff = linear_coefficient(q, shifted.a);
    for (int trial = 0; trial < 20; ++trial) {
      auto x = oracle::random_point(rng, 4);
      Rational want = x[0] * x[3] + x[1] * x[2];
      x.push_back(Rational(0));
      o.expect(coeff(x) == want, "gadget route reproduces P(phi_2)");
    }
  }
}

// 9. End-to-end many-one reduction.
void criterion_sharp(Outcome& o) {
  std::size_t gadget = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint32_t bits = 0; bits < (1u << (n * n)); ++bits) {
      auto a = bits_matrix(n, bits);
      o.expect(oracle::partial_permanent(perm_to_partial_perm(a)) == oracle::permanent(a), "[[A,-I],[-I,0]] gadget");
      ++gadget;
    }
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    auto a = bits_matrix(2, bits);
    for (bool bip : {false, true})
      o.expect(Rational(perm_via_vc(a, bip)) == oracle::permanent(a), "perm_via_vc, n=2");
  }
  std::mt19937_64 rng(kSeed + 9);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = bits_matrix(3, rng() & 511);
    auto want = oracle::permanent(a);
    for (bool bip : {false, true}) {
      auto inst = emit_instance(a, bip);
      if (bip) o.expect(!inst.graph.has_loops() && inst.graph.bipartition().has_value(), "bipartite instance");
      o.expect(Rational(inst.recover(count_vertex_covers(inst.graph))) == want, "perm_via_vc, n=3");
    }
  }
  o.detail = std::to_string(gadget) + " gadget matrices, 32 n=2 and 200 n=3 pipeline runs";
}

// 10. 2-SAT translations.
void criterion_two_sat(Outcome& o) {
  std::mt19937_64 rng(kSeed + 10);
  for (int trial = 0; trial < 50; ++trial) {
    auto n = 1 + rng() % 12;
    auto g = oracle::random_graph(rng, n, 0.3, trial % 2 == 1);
    o.expect(count_sat(vc_to_positive2sat(g)) == oracle::count_covers(g), "positive 2-SAT counts covers");
    o.expect(count_sat(is_to_negative2sat(g)) == oracle::count_independent(g), "negative 2-SAT counts sets");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 4 == 0) pairs.emplace_back(i, j);
    Poset p(std::vector<Weight>(n, Rational(1)), pairs);
    o.expect(count_sat(ideal_to_implicative2sat(p)) == oracle::PosetOracle(n, pairs).count(true),
             "implicative 2-SAT counts ideals");
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "dichotomy classifier catalog", 1, criterion_classifier},
      {2, "easy path = enumeration (1000 formulas) + 10^5-variable instance", 30, criterion_easy},
      {3, "IP(G'_n) = symbolic partial permanent, n <= 3", 10, criterion_partial_perm_graph},
      {4, "incidence exchange, all graphs on <= 5 vertices", 60, criterion_incidence},
      {5, "IP/VCP reciprocity, 20 graphs x 50 points", 10, criterion_reciprocity},
      {6, "poset polynomials and AP = IPP on bipartize images", 60, criterion_posets},
      {7, "OR0 implementation and substitution identity", 60, criterion_implement},
      {8, "permanent via homogeneous component and gadget route", 60, criterion_affine},
      {9, "permanent -> #VC many-one reduction", 300, criterion_sharp},
      {10, "2-SAT translations count VC / IS / ideals", 30, criterion_two_sat},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double elapsed = seconds_since(t0);
    bool in_time = elapsed <= c.limit_seconds;
    bool pass = o.ok && in_time;
    failed += !pass;
    char line[512];
    std::snprintf(line, sizeof line, "%s criterion %2d: %s [%zu checks, %.2fs, limit %.0fs, exact]%s%s",
                  pass ? "PASS" : "FAIL", c.id, c.name, o.checks, elapsed, c.limit_seconds,
                  o.detail.empty() && in_time ? "" : " - ", in_time ? o.detail.c_str() : "time limit exceeded");
    std::cout << line << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
