// Serial reference against the incremental OpenMP enumeration.

#include <benchmark/benchmark.h>

#include "arf/sequence.hpp"
#include "arf/tree.hpp"

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const int f = static_cast<int>(state.range(0));
  std::size_t nodes = 0;
  for (auto _ : state) {
    auto tree = arf::enumerate_ar_serial(f);
    nodes = tree.nodes.size();
    benchmark::DoNotOptimize(tree);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_EnumerateParallel(benchmark::State& state) {
  const int f = static_cast<int>(state.range(0));
  arf::EnumerateOptions opts;
  opts.threads = static_cast<int>(state.range(1));
  std::size_t nodes = 0;
  for (auto _ : state) {
    auto tree = arf::enumerate_ar(f, opts);
    nodes = tree.nodes.size();
    benchmark::DoNotOptimize(tree);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_MaximalElements(benchmark::State& state) {
  const int f = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(arf::maximal_elements(f, threads));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(45)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)
    ->ArgsProduct({{45, 60, 100}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_MaximalElements)->ArgsProduct({{60, 100}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
