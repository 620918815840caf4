#include <benchmark/benchmark.h>

#include "lsmetrics/distances.hpp"
#include "lsmetrics/ks.hpp"
#include "lsmetrics/nn_two_sample.hpp"
#include "lsmetrics/separability.hpp"
#include "lsmetrics/sliced_wasserstein.hpp"
#include "lsmetrics/synthetic.hpp"

namespace {

lsm::DataSet cloud(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::vector<double> mean(dim, 0.0);
  return lsm::gaussian_cloud(n, mean, 1.0, seed);
}

void BM_IcdSet(benchmark::State& state) {
  auto x = cloud(static_cast<std::size_t>(state.range(0)), 784, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsm::icd_set(x, 1));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IcdSet)->RangeMultiplier(2)->Range(125, 1000)->Complexity();

void BM_BcdSet(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto x = cloud(n, 784, 2);
  auto y = cloud(n, 784, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsm::bcd_set(x, y, 1));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BcdSet)->RangeMultiplier(2)->Range(125, 1000)->Complexity();

void BM_KsDistance(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto a = lsm::icd_set(cloud(n, 8, 4)).values;
  auto b = lsm::icd_set(cloud(n, 8, 5)).values;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsm::ks_distance(a, b));
  }
}
BENCHMARK(BM_KsDistance)->RangeMultiplier(2)->Range(250, 2000);

void BM_LikenessScore(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto r = cloud(n, 784, 6);
  auto g = cloud(n, 784, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsm::likeness_score(r, g, 1));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LikenessScore)
    ->RangeMultiplier(2)
    ->Range(125, 500)
    ->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_Loo1nn(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto r = cloud(n, 64, 8);
  auto g = cloud(n, 64, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsm::loo_1nn_accuracy(r, g, 1));
  }
}
BENCHMARK(BM_Loo1nn)->RangeMultiplier(2)->Range(125, 500);

void BM_SlicedWasserstein(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto r = cloud(n, 64, 10);
  auto g = cloud(n, 64, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsm::sliced_wasserstein(r, g, 100, 10, 1, 1));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SlicedWasserstein)
    ->RangeMultiplier(2)
    ->Range(250, 1000)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
