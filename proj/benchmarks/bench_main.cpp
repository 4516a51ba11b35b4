#include <benchmark/benchmark.h>

#include "hypermatch/baranyai.hpp"
#include "hypermatch/constructions.hpp"
#include "hypermatch/fractional_lp.hpp"
#include "hypermatch/integer_matching.hpp"
#include "hypermatch/thresholds.hpp"
#include "support/oracles.hpp"

namespace hm = hypermatch;

static void BM_FractionalComplete(benchmark::State& state) {
  const auto g = hm::complete(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(hm::solve_fractional(g));
  state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_FractionalComplete)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_FractionalRandom(benchmark::State& state) {
  hm::testing::Rng rng(1);
  const auto g = hm::testing::random_hypergraph(rng, static_cast<int>(state.range(0)), 3, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(hm::check_duality(g));
}
BENCHMARK(BM_FractionalRandom)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

static void BM_MaxMatchingParity(benchmark::State& state) {
  const auto g = hm::parity_construction(static_cast<int>(state.range(0)), 4).graph;
  for (auto _ : state) benchmark::DoNotOptimize(hm::max_matching(g, {state.range(1) != 0}));
  state.SetLabel(state.range(1) ? "lp bound" : "counting bound");
}
BENCHMARK(BM_MaxMatchingParity)->ArgsProduct({{8, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_MaxMatchingRandom(benchmark::State& state) {
  hm::testing::Rng rng(2);
  const auto g = hm::testing::random_hypergraph(rng, 15, 3, 0.08);
  for (auto _ : state) benchmark::DoNotOptimize(hm::max_matching(g, {state.range(0) != 0}));
  state.SetLabel(state.range(0) ? "lp bound" : "counting bound");
}
BENCHMARK(BM_MaxMatchingRandom)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Baranyai(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hm::decompose(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  }
}
BENCHMARK(BM_Baranyai)->Args({10, 2})->Args({9, 3})->Args({12, 3})->Args({12, 4})->Unit(benchmark::kMillisecond);

static void BM_Threshold(benchmark::State& state) {
  hm::ThresholdQuery q;
  q.k = 3;
  q.n = 6;
  q.d = static_cast<int>(state.range(0));
  q.target = 2;
  q.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hm::threshold_exact(q));
}
BENCHMARK(BM_Threshold)->ArgsProduct({{0, 1}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_ThresholdFractional(benchmark::State& state) {
  hm::ThresholdQuery q;
  q.k = 2;
  q.n = 7;
  q.d = 0;
  q.kind = hm::MatchingKind::fractional;
  q.target = hm::make_rational(5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hm::threshold_exact(q));
}
BENCHMARK(BM_ThresholdFractional)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
