#include <benchmark/benchmark.h>

#include "awcd/detect.hpp"
#include "awcd/metrics.hpp"
#include "awcd/sbm.hpp"

namespace {

using namespace awcd;

std::pair<Graph, Labeling> instance(std::uint32_t block, double theta, double rho) {
  return sample(SbmSpec::symmetric(block, 2, theta, rho), 1);
}

void BM_Sample(benchmark::State& state) {
  const auto block = static_cast<std::uint32_t>(state.range(0));
  const SbmSpec spec = SbmSpec::symmetric(block, 2, 0.05, 0.0125);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto [g, labels] = sample(spec, seed++);
    benchmark::DoNotOptimize(g.num_edges());
  }
}
BENCHMARK(BM_Sample)->Arg(250)->Arg(500)->Arg(1000);

void BM_KRingsAll(benchmark::State& state) {
  const auto [g, labels] = instance(500, 0.02, 0.005);
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto rings = k_rings_all(g, k, 1);
    benchmark::DoNotOptimize(rings.size());
  }
}
BENCHMARK(BM_KRingsAll)->Arg(1)->Arg(2)->Arg(3);

void BM_TestMatrix(benchmark::State& state) {
  const auto [g, labels] = instance(500, 0.02, 0.005);
  const auto k = static_cast<unsigned>(state.range(0));
  const Rings rings = make_rings(g, k, 1);
  const Variant variant{VariantTag::debiased, BiasIndicator::edge};
  for (auto _ : state) {
    TestMatrix t = test_matrix(g, rings, variant, 1);
    benchmark::DoNotOptimize(t.get(0, 1));
  }
}
BENCHMARK(BM_TestMatrix)->Arg(1)->Arg(2)->Arg(3);

void BM_TestMatrixPlus(benchmark::State& state) {
  // Reference path; quadratic set enumeration per pair.
  const auto [g, labels] = instance(150, 0.05, 0.0125);
  const Rings rings = make_rings(g, 2, 1);
  const Variant variant{VariantTag::plus, BiasIndicator::edge};
  for (auto _ : state) {
    TestMatrix t = test_matrix(g, rings, variant, 1);
    benchmark::DoNotOptimize(t.get(0, 1));
  }
}
BENCHMARK(BM_TestMatrixPlus);

void BM_BestRandSweep(benchmark::State& state) {
  const auto [g, labels] = instance(500, 0.02, 0.005);
  const WeightMatrix w_star = true_weights(labels);
  const Rings rings = make_rings(g, 2, 1);
  const TestMatrix t = test_matrix(g, rings, {VariantTag::debiased, BiasIndicator::edge}, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_rand_over_lambda(t, w_star));
  }
}
BENCHMARK(BM_BestRandSweep);

}  // namespace

BENCHMARK_MAIN();
