#include <benchmark/benchmark.h>

#include "permuta/group_catalog.hpp"
#include "permuta/lattice.hpp"
#include "permuta/serial.hpp"
#include "permuta/subgroup_analysis.hpp"

namespace {

const char* const kGroups[] = {"S(4)", "GL(2,3)", "GL(3,2)", "GL(2,4)"};

void BM_AllSubgroupsSerial(benchmark::State& state) {
  const auto g = permuta::parse_group(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(permuta::serial::all_subgroups(*g));
  state.SetLabel(g->label());
}

void BM_AllSubgroupsOpenMP(benchmark::State& state) {
  const auto g = permuta::parse_group(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(permuta::all_subgroups(*g));
  state.SetLabel(g->label());
}

void BM_ClassifySerial(benchmark::State& state) {
  const auto g = permuta::parse_group(kGroups[state.range(0)]);
  const auto subs = permuta::all_subgroups(*g);
  for (auto _ : state) benchmark::DoNotOptimize(permuta::serial::classify_subgroups(*g, subs));
  state.SetLabel(g->label());
}

void BM_ClassifyOpenMP(benchmark::State& state) {
  const auto g = permuta::parse_group(kGroups[state.range(0)]);
  const auto subs = permuta::all_subgroups(*g);
  for (auto _ : state) benchmark::DoNotOptimize(permuta::classify_subgroups(*g, subs));
  state.SetLabel(g->label());
}

}  // namespace

BENCHMARK(BM_AllSubgroupsSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllSubgroupsOpenMP)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifySerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyOpenMP)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
