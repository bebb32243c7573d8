#include <benchmark/benchmark.h>

#include "hooklab/brackets.hpp"
#include "hooklab/partition.hpp"

namespace {

using namespace hooklab;

void BM_EnumeratePartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  long count = 0;
  for (auto _ : state) {
    count = 0;
    for_each_partition(n, [&](const Partition&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.counters["partitions"] = static_cast<double>(count);
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_HookMultiset(benchmark::State& state) {
  const Partition p{12, 10, 9, 7, 7, 5, 3, 2, 2, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hook_multiset(p, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_HookMultiset)->Arg(1)->Arg(3);

void BM_WeightedSumF1(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(weighted_sum(statistics::f_t(1), order));
  }
}
BENCHMARK(BM_WeightedSumF1)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_VerifyTheorem1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_theorem1(2, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_VerifyTheorem1)->Arg(25)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
