#include <benchmark/benchmark.h>

#include "focal/clifford.hpp"
#include "focal/jacobi.hpp"

using namespace focal;

static void BM_WeightSystemF4_26(benchmark::State& state) {
  const RootSystem& f4 = root_system(RootSystemId::F4);
  for (auto _ : state)
    benchmark::DoNotOptimize(weight_system(f4, {0, 0, 0, 1}));
}
BENCHMARK(BM_WeightSystemF4_26);

static void BM_WeightSystemF4_273(benchmark::State& state) {
  const RootSystem& f4 = root_system(RootSystemId::F4);
  for (auto _ : state)
    benchmark::DoNotOptimize(weight_system(f4, {0, 0, 1, 0}));
}
BENCHMARK(BM_WeightSystemF4_273);

static void BM_DominantMultiplicitiesF4(benchmark::State& state) {
  const RootSystem& f4 = root_system(RootSystemId::F4);
  const DominantWeight lambda{0, 0, 1, static_cast<long long>(state.range(0))};
  for (auto _ : state)
    benchmark::DoNotOptimize(dominant_weight_multiplicities(f4, lambda));
  state.SetLabel("dim=" + std::to_string(weyl_dimension(f4, lambda)));
}
BENCHMARK(BM_DominantMultiplicitiesF4)->DenseRange(0, 3);

static void BM_SliceMultiplicityLargest(benchmark::State& state) {
  // The biggest representation the eigenvalue tables require: 4313088
  // dimensions, handled without materializing the weight multiset.
  const FocalSpace& op2 = focal_space(FocalSpaceId::OP2);
  for (auto _ : state)
    benchmark::DoNotOptimize(slice_multiplicity(op2, {0, 0, 1, 5}));
}
BENCHMARK(BM_SliceMultiplicityLargest);

static void BM_BranchF4_273(benchmark::State& state) {
  const FocalSpace& op2 = focal_space(FocalSpaceId::OP2);
  for (auto _ : state)
    benchmark::DoNotOptimize(branch(op2, {0, 0, 1, 0}));
}
BENCHMARK(BM_BranchF4_273);

static void BM_Spectrum(benchmark::State& state) {
  const FocalSpace& s = focal_space(static_cast<FocalSpaceId>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_spectrum(s));
  state.SetLabel(focal_space_name(s.id));
}
BENCHMARK(BM_Spectrum)->DenseRange(0, 2);

static void BM_CliffordConstruction(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build_clifford_system(16));
}
BENCHMARK(BM_CliffordConstruction);

BENCHMARK_MAIN();
