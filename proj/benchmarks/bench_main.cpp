#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dichotomy/easy_eval.hpp"
#include "dichotomy/formulas.hpp"
#include "dichotomy/graph_poly.hpp"
#include "dichotomy/poset_poly.hpp"
#include "dichotomy/relations.hpp"
#include "dichotomy/sharp_reductions.hpp"

using namespace dichotomy;

namespace {

// Alternating EQ/NEQ chain over n variables.
Formula equality_chain(std::size_t n) {
  Formula f(n);
  auto eq = f.add_relation(rel::equal());
  auto ne = f.add_relation(rel::not_equal());
  for (std::size_t i = 0; i + 1 < n; ++i) f.add_constraint(i % 2 ? ne : eq, {i, i + 1});
  return f;
}

RationalMatrix random_matrix(std::size_t n, unsigned seed, int lo = -2, int hi = 2) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

// Unit weights keep the arithmetic O(1) so this measures the factorization.
void BM_EasyEvaluateChain(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Formula f = equality_chain(n);
  std::vector<Rational> point(n, Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(easy_evaluate(f, point));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EasyEvaluateChain)->RangeMultiplier(10)->Range(100, 100000)->Complexity(benchmark::oN);

// With 3/2 everywhere the value has O(n) bits, so the bignum products dominate.
void BM_EasyEvaluateChainBigValue(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Formula f = equality_chain(n);
  std::vector<Rational> point(n, Rational(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(easy_evaluate(f, point));
}
BENCHMARK(BM_EasyEvaluateChainBigValue)->RangeMultiplier(10)->Range(100, 100000);

void BM_EnumerateFormulaPoly(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Formula f(n);
  auto r = f.add_relation(rel::or0());
  for (std::size_t i = 0; i + 1 < n; ++i) f.add_constraint(r, {i, i + 1});
  std::vector<Rational> point(n, Rational(2));
  for (auto _ : state) benchmark::DoNotOptimize(eval_formula_poly(f, point));
}
BENCHMARK(BM_EnumerateFormulaPoly)->DenseRange(8, 20, 4);

void BM_Permanent(benchmark::State& state) {
  RationalMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
}
BENCHMARK(BM_Permanent)->DenseRange(3, 8, 1);

void BM_CountCoversPipeline(benchmark::State& state) {
  RationalMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 2, 0, 1);
  ReductionInstance inst = emit_instance(m, state.range(1) != 0);
  state.counters["vertices"] = static_cast<double>(inst.graph.num_vertices());
  for (auto _ : state) benchmark::DoNotOptimize(count_vertex_covers(inst.graph));
}
BENCHMARK(BM_CountCoversPipeline)->Args({2, 0})->Args({3, 0})->Args({2, 1})->Unit(benchmark::kMillisecond);

void BM_EmitInstance(benchmark::State& state) {
  RationalMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 3, 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(emit_instance(m, false));
}
BENCHMARK(BM_EmitInstance)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_CountIdeals(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(4);
  std::bernoulli_distribution coin(0.2);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  Poset p(std::vector<Weight>(n, Weight(Rational(1))), pairs);
  for (auto _ : state) benchmark::DoNotOptimize(count_ideals(p));
}
BENCHMARK(BM_CountIdeals)->DenseRange(10, 20, 5);

}  // namespace

BENCHMARK_MAIN();
