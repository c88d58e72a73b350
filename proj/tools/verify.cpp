#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "dichotomy/affine_gadgets.hpp"
#include "dichotomy/easy_eval.hpp"
#include "dichotomy/formats.hpp"
#include "dichotomy/implement.hpp"
#include "dichotomy/sharp_reductions.hpp"

namespace dichotomy::verify {

namespace {

class Checker {
 public:
  Checker(std::string name, std::uint64_t seed) : rng(seed) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok && result_.failures.size() < 20) result_.failures.push_back(what);
  }

  SuiteResult result() && { return std::move(result_); }

  Rational rational(int span = 4, int den = 3) {
    std::uniform_int_distribution<int> num(-span, span), d(1, den);
    Rational q(num(rng), d(rng));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational() {
    for (;;)
      if (auto q = rational(); q != 0) return q;
  }

  std::vector<Rational> point(std::size_t n) {
    std::vector<Rational> x(n);
    for (auto& q : x) q = rational();
    return x;
  }

  WeightedGraph symbolic_graph(std::size_t n, double p) {
    WeightedGraph g(0);
    for (std::size_t v = 0; v < n; ++v) g.add_vertex(Symbol{v});
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    return g;
  }

  std::mt19937_64 rng;

 private:
  SuiteResult result_;
};

std::vector<Weight> symbols(std::size_t n) {
  std::vector<Weight> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(Symbol{i});
  return w;
}

Formula random_formula(Checker& c, const std::vector<Relation>& pool, std::size_t n, std::size_t m) {
  Formula f(n);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& r = pool[c.rng() % pool.size()];
    std::vector<std::size_t> args;
    for (int i = 0; i < r.rank(); ++i) args.push_back(c.rng() % n);
    f.add_constraint(r, args);
  }
  return f;
}

RationalMatrix bits_matrix(std::size_t n, std::uint32_t bits) {
  RationalMatrix m(n, Rational(0));
  for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = (bits >> k) & 1;
  return m;
}

// Composes the affine gadgets into a pure xor<k>_<c> formula; the returned
// evaluator takes the original variables followed by the shift variable.
struct AffineRoute {
  AffineFormula formula;
  Evaluator over_shifted;
  std::size_t a;
};

AffineRoute affine_route(const AffineFormula& f, std::size_t k, bool constant) {
  auto shifted = shift_constants(f);
  auto chain = chain_decompose(shifted.formula);
  std::vector<GadgetResult> steps{chain};
  if (constant) steps.push_back(ternary0_to_ternary1(steps.back().formula));
  steps.push_back(pad_to_relation(steps.back().formula, k, constant));
  auto out = steps.back().formula;
  auto phi = to_formula(out);
  Evaluator eval = [phi, steps](std::span<const Rational> x) {
    std::vector<Rational> y(x.begin(), x.end());
    for (const auto& s : steps) y = s.extend(y);
    return eval_formula_poly(phi, y);
  };
  return {out, eval, shifted.a};
}

void suite_relations(Checker& c) {
  // Affine subsets of {0,1}^k as truth-table masks, by span enumeration.
  for (int k = 1; k <= 4; ++k) {
    const std::uint32_t size = 1u << k;
    std::set<std::uint32_t> affine_tables{0};
    for (std::uint32_t base = 0; base < size; ++base)
      for (std::uint32_t gens = 0; gens < (1u << size); gens += 1) {
        if (std::popcount(gens) > k) continue;
        std::set<std::uint32_t> span{0};
        for (std::uint32_t g = 0; g < size; ++g) {
          if (!((gens >> g) & 1)) continue;
          auto copy = span;
          for (auto s : copy) span.insert(s ^ g);
        }
        std::uint32_t table = 0;
        for (auto s : span) table |= 1u << (s ^ base);
        affine_tables.insert(table);
      }
    bool agree = true;
    for (std::uint32_t table = 0; table < (1u << size) && agree; ++table) {
      auto r = Relation::from_predicate("r", k, [&](auto t) { return (table >> t) & 1; });
      bool want = affine_tables.count(table) > 0;
      agree = is_affine(r) == want;
      if (is_width2_expressible(r) && !is_affine(r)) agree = false;
    }
    c.expect(agree, "is_affine agrees with affine-subspace enumeration at rank " + std::to_string(k));
  }
}

void suite_classify(Checker& c) {
  std::vector<Relation> easy{rel::zero(), rel::one(), rel::equal(), rel::not_equal()};
  c.expect(classify(easy).verdict == Verdict::Easy, "four width-2 relations are easy");
  std::vector<std::pair<Relation, WitnessKind>> hard{
      {rel::or0(), WitnessKind::NonAffine},         {rel::or1(), WitnessKind::NonAffine},
      {rel::or2(), WitnessKind::NonAffine},         {rel::clause3(), WitnessKind::NonAffine},
      {rel::parity(3, false), WitnessKind::WideAffine}, {rel::parity(3, true), WitnessKind::WideAffine}};
  for (const auto& [r, kind] : hard) {
    std::vector<Relation> s{r};
    auto cl = classify(s);
    c.expect(cl.verdict == Verdict::Hard && cl.witness && cl.witness->kind == kind && cl.witness->relation == r.name(),
             "classify {" + r.name() + "}");
  }
  std::vector<Relation> pool{rel::zero(), rel::equal(), rel::not_equal(), rel::or1(), rel::parity(3, true),
                             Relation("w", 3, {0b010, 0b111})};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Relation> s;
    for (const auto& r : pool)
      if (c.rng() % 2) s.push_back(r);
    if (s.empty()) continue;
    auto verdict = classify(s).verdict;
    std::shuffle(s.begin(), s.end(), c.rng);
    auto cl = classify(s);
    c.expect(cl.verdict == verdict, "verdict is order-insensitive");
    if (cl.verdict == Verdict::Easy)
      for (const auto& r : s) c.expect(is_width2_expressible(r), "easy relation " + r.name() + " is width-2");
  }
}

void suite_polynomial(Checker& c) {
  std::vector<Relation> pool{rel::or0(), rel::or2(), rel::not_equal(), rel::clause3()};
  for (int trial = 0; trial < 30; ++trial) {
    auto n = 1 + c.rng() % 8;
    auto f = random_formula(c, pool, n, c.rng() % 5);
    auto p = poly_of_formula(f);
    auto x = c.point(n);
    c.expect(p.evaluate(x) == eval_formula_poly(f, x), "evaluate(poly_of_formula) = eval_formula_poly");
    c.expect(parse_polynomial(serialize(p), n) == p, "serialize/parse is the identity");
    auto d = c.rng() % (n + 1);
    auto h = homogeneous_component(as_evaluator(p), n, n, d);
    auto t = c.nonzero_rational();
    auto tx = x;
    for (auto& q : tx) q *= t;
    Rational td = 1;
    for (std::size_t i = 0; i < d; ++i) td *= t;
    c.expect(h(tx) == td * h(x), "homogeneous component scales by t^delta");
  }
}

void suite_easy(Checker& c) {
  std::vector<Relation> pool{rel::zero(), rel::one(), rel::equal(), rel::not_equal(),
                             Relation("w", 3, {0b010, 0b111})};
  for (int trial = 0; trial < 200; ++trial) {
    auto n = 1 + c.rng() % 20;
    auto f = random_formula(c, pool, n, c.rng() % 12);
    auto x = c.point(n);
    c.expect(easy_evaluate(f, x) == eval_formula_poly(f, x), "easy_evaluate = eval_formula_poly");
    if (n <= 12) c.expect(expand(easy_factor(f), n) == poly_of_formula(f), "expansion = poly_of_formula");
  }
}

void suite_graph(Checker& c) {
  for (std::size_t n = 1; n <= 3; ++n)
    c.expect(ip(build_partial_perm_graph(n)) == partial_permanent(symbolic_matrix(n)),
             "IP(G'_" + std::to_string(n) + ") = PER*");
  for (int trial = 0; trial < 30; ++trial) {
    auto g = c.symbolic_graph(1 + c.rng() % 6, 0.4);
    const Rational sign = g.num_edges() % 2 ? -1 : 1;
    auto h = incidence_transform(g);
    c.expect(vcp(h) == ip(g).scaled(sign), "VCP(incidence) = (-1)^e IP");
    c.expect(ip(h) == vcp(g), "IP(incidence) = VCP");
    if (g.num_vertices() + 3 * g.num_edges() > 20) continue;
    auto b = bipartize(g);
    c.expect(b.num_vertices() == g.num_vertices() + 3 * g.num_edges() && b.num_edges() == 4 * g.num_edges(),
             "bipartize size");
    c.expect(two_coloring(b).has_value(), "bipartize output is 2-colourable");
    c.expect(ip(b) == ip(g).scaled(sign), "IP(bipartize) = (-1)^e IP");
    c.expect(vcp(b) == vcp(g), "VCP(bipartize) = VCP");
  }
  for (int trial = 0; trial < 20; ++trial) {
    auto g = c.symbolic_graph(1 + c.rng() % 10, 0.35);
    auto x = c.point(g.num_vertices());
    for (auto& q : x)
      if (q == 0) q = 1;
    std::vector<Rational> inv;
    Rational prod = 1;
    for (const auto& q : x) {
      inv.push_back(1 / q);
      prod *= q;
    }
    c.expect(ip_value(g, x) == prod * vcp_value(g, inv), "reciprocity");
  }
}

void suite_poset(Checker& c) {
  for (int trial = 0; trial < 20; ++trial) {
    auto n = 2 + c.rng() % 10;
    WeightedGraph g(0);
    for (std::size_t v = 0; v < n; ++v) g.add_vertex(Symbol{v});
    auto half = n / 2;
    for (std::size_t u = 0; u < half; ++u)
      for (std::size_t v = half; v < n; ++v)
        if (c.rng() % 3 == 0) g.add_edge(u, v);
    c.expect(antichain_poly(poset_from_bipartite(g)) == ip(g), "AP(poset(G)) = IP(G)");
  }
  for (int trial = 0; trial < 30; ++trial) {
    auto n = 1 + c.rng() % 10;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (c.rng() % 4 == 0) pairs.emplace_back(i, j);
    Poset p(symbols(n), pairs);
    c.expect(count_antichains(p) == count_ideals(p), "#antichains = #ideals");
    bool inverse = true;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      auto s = VarSet::from_mask(m);
      if (is_antichain(p, s)) inverse = inverse && maximal_elements(p, downward_closure(p, s)) == s;
      if (is_ideal(p, s)) inverse = inverse && downward_closure(p, maximal_elements(p, s)) == s;
    }
    c.expect(inverse, "natural bijection is mutually inverse");
    c.expect(count_sat(ideal_to_implicative2sat(p)) == count_ideals(p), "OR1 encoding counts ideals");
  }
  for (int trial = 0; trial < 10; ++trial) {
    auto base = c.symbolic_graph(2 + c.rng() % 3, 0.6);
    while (base.num_edges() > 4) base = c.symbolic_graph(3, 0.6);
    auto b = bipartize(base);
    auto p = poset_from_bipartite(b);
    c.expect(antichain_poly(p) == ideal_poly(p), "AP = IPP on bipartize images");
    std::set<VarSet> images;
    std::size_t antichains = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) {
      auto s = VarSet::from_mask(m);
      if (!is_antichain(p, s)) continue;
      ++antichains;
      auto image = weighted_bijection(p, s);
      images.insert(image);
      if (!is_ideal(p, image) || subset_weight(p, image) != subset_weight(p, s)) antichains = SIZE_MAX;
    }
    c.expect(antichains == images.size(), "weighted bijection is injective and weight-preserving");
  }
}

void suite_implement(Checker& c) {
  auto found = search_implementation(rel::or0(), {rel::clause3(), rel::never()});
  c.expect(found && check_perfect_faithful(*found), "OR0 from {CLAUSE3, F}");
  if (!found) return;
  ImplementationTable table{{"OR0", *found}};
  for (int trial = 0; trial < 30; ++trial) {
    auto n = 2 + c.rng() % 4;
    Formula phi(n);
    for (std::size_t k = 0, m = c.rng() % 5; k < m; ++k) phi.add_constraint(rel::or0(), {c.rng() % n, c.rng() % n});
    auto psi = substitute(phi, table);
    auto x = c.point(n);
    auto y = x;
    y.resize(psi.num_vars(), Rational(1));
    c.expect(eval_formula_poly(psi, y) == eval_formula_poly(phi, x), "substitution identity");
    auto e = eliminate_false(psi);
    auto z = y;
    for (auto v : e.zero_set) z[v] = 0;
    auto yz = y;
    for (auto v : e.zero_set) yz[v] = 0;
    c.expect(eval_formula_poly(e.formula, z) == eval_formula_poly(psi, yz), "F-elimination identity");
  }
  // The vertex-cover family as {CLAUSE3}-formulas, at n <= 2.
  for (std::size_t trial = 0; trial < 8; ++trial) {
    auto g = c.symbolic_graph(2 + c.rng() % 3, 0.6);
    auto phi = or0_formula_of_graph(g);
    auto e = eliminate_false(substitute(phi, table));
    auto x = c.point(e.formula.num_vars());
    for (std::size_t v = g.num_vertices(); v < x.size(); ++v) x[v] = 1;
    for (auto v : e.zero_set) x[v] = 0;
    c.expect(eval_formula_poly(e.formula, x) == vcp_value(g, std::span(x).first(g.num_vertices())),
             "CLAUSE3 route reproduces VCP");
  }
}

void suite_affine(Checker& c) {
  for (int trial = 0; trial < 10; ++trial) {
    auto n = 1 + c.rng() % 3;
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = static_cast<long>(c.rng() % 7) - 3;
    c.expect(permanent_via_hom(m) == permanent(m), "permanent via homogeneous component");
  }
  auto phi = build_phi_n(2);
  for (bool constant : {false, true}) {
    auto route = affine_route(phi, 4, constant);
    auto coeff = linear_coefficient(route.over_shifted, route.a);
    bool pure = std::all_of(route.formula.constraints.begin(), route.formula.constraints.end(),
                            [&](const auto& k) { return k.vars.size() == 4 && k.constant == constant; });
    c.expect(pure, "route output uses one relation shape");
    for (int trial = 0; trial < 5; ++trial) {
      auto x = c.point(4);
      auto y = x;
      y.push_back(Rational(0));
      c.expect(coeff(y) == eval_formula_poly(to_formula(phi), x), "gadget route reproduces P(phi_2)");
    }
  }
}

void suite_sharp(Checker& c) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint32_t bits = 0; bits < (1u << (n * n)); ++bits) {
      auto a = bits_matrix(n, bits);
      c.expect(partial_permanent(perm_to_partial_perm(a)) == permanent(a), "Jerrum gadget");
    }
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    auto a = bits_matrix(2, bits);
    for (bool bip : {false, true})
      c.expect(Rational(perm_via_vc(a, bip)) == permanent(a), "perm_via_vc at n=2");
  }
  for (int trial = 0; trial < 3; ++trial) {
    auto a = bits_matrix(3, c.rng() & 511);
    auto inst = emit_instance(a);
    c.expect(serialize_instance(replay(inst.provenance)) == serialize_instance(inst), "provenance replays");
    c.expect(Rational(inst.recover(count_vertex_covers(inst.graph))) == permanent(a), "perm_via_vc at n=3");
  }
  for (int trial = 0; trial < 30; ++trial) {
    auto g = c.symbolic_graph(1 + c.rng() % 12, 0.3);
    WeightedGraph unit(g.num_vertices());
    for (const auto& [u, v] : g.edges()) unit.add_edge(u, v);
    c.expect(Rational(count_vertex_covers(unit)) == vcp_value(unit), "#VC = VCP at ones");
    c.expect(count_sat(vc_to_positive2sat(unit)) == count_vertex_covers(unit), "OR0 encoding counts covers");
    c.expect(count_sat(is_to_negative2sat(unit)) == count_independent_sets(unit), "OR2 encoding counts sets");
  }
}

void suite_formats(Checker& c) {
  for (int trial = 0; trial < 30; ++trial) {
    auto g = c.symbolic_graph(1 + c.rng() % 10, 0.3);
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      if (c.rng() % 2) g.set_weight(v, c.rational());
    c.expect(parse_graph(serialize_graph(g)) == g, "graph round trip");
    std::vector<Relation> pool{rel::or0(), rel::parity(4, true), rel::never()};
    auto n = 1 + c.rng() % 6;
    auto f = random_formula(c, pool, n, c.rng() % 5);
    c.expect(parse_formula(serialize_formula(f)) == f, "formula round trip");
  }
}

const std::map<std::string, std::function<void(Checker&)>>& registry() {
  static const std::map<std::string, std::function<void(Checker&)>> suites{
      {"affine-gadgets", suite_affine}, {"classify", suite_classify},         {"easy-eval", suite_easy},
      {"formats", suite_formats},       {"graph-poly", suite_graph},          {"implement", suite_implement},
      {"polynomial", suite_polynomial}, {"poset-poly", suite_poset},          {"relations", suite_relations},
      {"sharp-reductions", suite_sharp}};
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

std::vector<SuiteResult> run_suites(std::uint64_t seed, const std::vector<std::string>& only) {
  for (const auto& name : only)
    if (!registry().count(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  std::vector<SuiteResult> out;
  std::uint64_t k = 0;
  for (const auto& [name, fn] : registry()) {
    ++k;
    if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) continue;
    Checker c(name, seed * 1000003 + k);
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    out.push_back(std::move(c).result());
  }
  return out;
}

}  // namespace dichotomy::verify
