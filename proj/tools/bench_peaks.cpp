#include <algorithm>
#include <random>

#include <benchmark/benchmark.h>

#include "pbland/constructions.hpp"
#include "pbland/oracle.hpp"

using namespace pbland;

namespace {

VcspInstance chain2() { return build_cd_chain({2, 2, Variant::P10, BridgeConvention::ASide}); }

VcspInstance random20() {
  std::mt19937_64 rng(11);
  const std::size_t d = 20;
  InstanceBuilder b(d);
  for (int c = 0; c < 60; ++c) {
    const std::size_t arity = 1 + rng() % 3;
    std::vector<VariableId> scope;
    while (scope.size() < arity) {
      VariableId v{rng() % d};
      if (std::find(scope.begin(), scope.end(), v) == scope.end()) scope.push_back(v);
    }
    b.add(scope, static_cast<std::int64_t>(rng() % 201) - 100);
  }
  return b.build();
}

void BM_PeaksParallel(benchmark::State& state, VcspInstance (*make)()) {
  const auto inst = make();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_peaks(inst));
}

void BM_PeaksSerial(benchmark::State& state, VcspInstance (*make)()) {
  const auto inst = make();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_peaks_serial(inst));
}

}  // namespace

BENCHMARK_CAPTURE(BM_PeaksParallel, chain_m2, chain2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PeaksSerial, chain_m2, chain2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PeaksParallel, random_20, random20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PeaksSerial, random_20, random20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
