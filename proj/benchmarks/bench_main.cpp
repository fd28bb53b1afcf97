#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tipsum/addition_chain.hpp"
#include "tipsum/cascade.hpp"
#include "tipsum/coefficients.hpp"
#include "tipsum/oracle.hpp"

namespace {

std::vector<tipsum::ExactInt> samples(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000, 1'000'000);
  std::vector<tipsum::ExactInt> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(dist(rng));
  return v;
}

void BM_CascadeSum(benchmark::State& state) {
  const int power = static_cast<int>(state.range(0));
  const auto v = samples(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    tipsum::Cascade cascade(power);
    for (const auto& s : v) cascade.push(s);
    benchmark::DoNotOptimize(cascade.finalize(tipsum::coefficients_closed(power, cascade.samples_seen())));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_CascadeSum)->ArgsProduct({{2, 4, 7}, {256, 4096, 65536}});

void BM_AdditionChainBaseline(benchmark::State& state) {
  const int power = static_cast<int>(state.range(0));
  const auto v = samples(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(tipsum::oracle::baseline_sum(v, power));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_AdditionChainBaseline)->ArgsProduct({{2, 4, 7}, {256, 4096, 65536}});

void BM_FloatCascadePush(benchmark::State& state) {
  const int power = static_cast<int>(state.range(0));
  tipsum::FloatCascade cascade(power);
  double x = 0.0;
  for (auto _ : state) {
    cascade.push(x);
    x += 1.0;
  }
  benchmark::DoNotOptimize(cascade.snapshot().data());
}
BENCHMARK(BM_FloatCascadePush)->Arg(2)->Arg(7);

void BM_CoefficientsClosed(benchmark::State& state) {
  const int power = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tipsum::coefficients_closed(power, 1 << 20));
}
BENCHMARK(BM_CoefficientsClosed)->DenseRange(2, 12, 5);

void BM_CoefficientsStirling(benchmark::State& state) {
  const int power = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tipsum::coefficients_stirling(power, 1 << 20));
}
BENCHMARK(BM_CoefficientsStirling)->DenseRange(2, 12, 5);

void BM_OptimalChainSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tipsum::optimal_chain(state.range(0)));
}
BENCHMARK(BM_OptimalChainSearch)->Arg(7)->Arg(31)->Arg(63);

}  // namespace

BENCHMARK_MAIN();
