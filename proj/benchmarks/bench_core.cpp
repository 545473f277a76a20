#include <benchmark/benchmark.h>

#include <random>

#include "tightgraph/canonical.hpp"
#include "tightgraph/decompose.hpp"
#include "tightgraph/enumerate.hpp"
#include "tightgraph/random_build.hpp"
#include "tightgraph/reduce.hpp"
#include "tightgraph/sparsity.hpp"

namespace {

tg::SimpleGraph fixture(int n, int l, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return tg::random_tight_graph(n, tg::SparsityParams(l), rng);
}

void BM_pebble_is_sparse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const tg::SimpleGraph g = fixture(n, 2, 1);
  const tg::SparsityParams p(2);
  for (auto _ : state) benchmark::DoNotOptimize(tg::is_sparse(g, p));
  state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_pebble_is_sparse)->Arg(8)->Arg(16)->Arg(32);

void BM_canonical_form(benchmark::State& state) {
  const tg::SimpleGraph g = fixture(static_cast<int>(state.range(0)), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tg::canonical_form(g));
}
BENCHMARK(BM_canonical_form)->Arg(6)->Arg(8)->Arg(10);

void BM_reduce_step(benchmark::State& state) {
  const tg::SimpleGraph g = fixture(static_cast<int>(state.range(0)), 1, 3);
  const tg::SparsityParams p(1);
  for (auto _ : state) benchmark::DoNotOptimize(tg::reduce_step(g, p));
}
BENCHMARK(BM_reduce_step)->Arg(10)->Arg(20);

void BM_decompose(benchmark::State& state) {
  const tg::SimpleGraph g = fixture(static_cast<int>(state.range(0)), 1, 4);
  const tg::SparsityParams p(1);
  for (auto _ : state) benchmark::DoNotOptimize(tg::decompose(g, p));
}
BENCHMARK(BM_decompose)->Arg(10)->Arg(20);

void BM_brute_force_level(benchmark::State& state) {
  const tg::SparsityParams p(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(tg::generate_brute_force(static_cast<int>(state.range(0)), p));
}
BENCHMARK(BM_brute_force_level)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_move_closure(benchmark::State& state) {
  const tg::SparsityParams p(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(tg::generate_by_moves(static_cast<int>(state.range(0)), p));
}
BENCHMARK(BM_move_closure)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
