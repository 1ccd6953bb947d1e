// Serial reference vs OpenMP kernels: relation generation and atlas assembly.

#include <benchmark/benchmark.h>

#include "ssg/classify.hpp"
#include "ssg/grading.hpp"

namespace {

const char* kTypes[] = {"A2", "B2", "G2", "A3", "B3"};

void BM_RelationsSerial(benchmark::State& state) {
  const ssg::RootSystem rs(ssg::parse_cartan_type(kTypes[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(ssg::generate_relations_serial(rs, state.range(1)));
  state.SetLabel(kTypes[state.range(0)]);
}

void BM_RelationsParallel(benchmark::State& state) {
  const ssg::RootSystem rs(ssg::parse_cartan_type(kTypes[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(ssg::generate_relations(rs, state.range(1)));
  state.SetLabel(kTypes[state.range(0)]);
}

void BM_AtlasSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ssg::build_atlas_serial(static_cast<int>(state.range(0))));
}

void BM_AtlasParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ssg::build_atlas(static_cast<int>(state.range(0))));
}

void relation_args(benchmark::internal::Benchmark* b) {
  for (int t = 0; t < 5; ++t) b->Args({t, 3});
}

}  // namespace

BENCHMARK(BM_RelationsSerial)->Apply(relation_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RelationsParallel)->Apply(relation_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AtlasSerial)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AtlasParallel)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
