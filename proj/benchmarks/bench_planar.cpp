#include <benchmark/benchmark.h>

#include "planar/effective_action.hpp"
#include "planar/moments.hpp"
#include "planar/products.hpp"
#include "planar/random.hpp"
#include "planar/sampler.hpp"
#include "planar/trees.hpp"

using namespace planar;

namespace {

// Arguments: alphabet, degree.
void BM_CauchyProduct(benchmark::State& state) {
  Rng rng(1);
  const int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  const auto f = random_series(rng, n, d, 0), g = random_series(rng, n, d, 0);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_CauchyProduct)->Args({2, 6})->Args({3, 6})->Unit(benchmark::kMicrosecond);

void BM_Compose(benchmark::State& state) {
  Rng rng(2);
  const int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  const auto f = random_series(rng, n, d, 0);
  std::vector<Series> comps;
  for (int i = 0; i < n; ++i) comps.push_back(random_g0(rng, n, d));
  const Field g(comps);
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_Compose)->Args({2, 6})->Args({3, 5})->Unit(benchmark::kMillisecond);

void BM_Bullet(benchmark::State& state) {
  Rng rng(3);
  const int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  const auto f = random_g1(rng, n, d), g = random_g1(rng, n, d);
  for (auto _ : state) benchmark::DoNotOptimize(bullet(f, g));
}
BENCHMARK(BM_Bullet)->Args({2, 6})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_CumulantsFromMoments(benchmark::State& state) {
  Rng rng(4);
  const int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  const Moments<Rational> m(random_g1(rng, n, d));
  for (auto _ : state) benchmark::DoNotOptimize(cumulants_from_moments(m));
}
BENCHMARK(BM_CumulantsFromMoments)->Args({1, 8})->Args({2, 6})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_EffectiveAction(benchmark::State& state) {
  Rng rng(5);
  const int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  const auto k = random_regular_cumulants(rng, n, d);
  for (auto _ : state) benchmark::DoNotOptimize(effective_action(k));
}
BENCHMARK(BM_EffectiveAction)->Args({1, 8})->Args({2, 6})->Unit(benchmark::kMillisecond);

void BM_EnumerateTrees(benchmark::State& state) {
  const int marks = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_admissible(marks));
}
BENCHMARK(BM_EnumerateTrees)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

// Arguments: word length, y-degree (two letters).
void BM_TreeExpansion(benchmark::State& state) {
  Rng rng(6);
  const int len = static_cast<int>(state.range(0)), degree = static_cast<int>(state.range(1));
  const auto k = random_regular_cumulants(rng, 2, len + degree);
  const auto l = effective_action(k);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(1 + i % 2);
  for (auto _ : state) {
    FeynmanContext<Rational> ctx(k, l, degree);
    benchmark::DoNotOptimize(tree_expansion(ctx, w));
  }
}
BENCHMARK(BM_TreeExpansion)->Args({4, 4})->Args({5, 4})->Unit(benchmark::kMillisecond);

// Arguments: matrix size, samples.
void BM_SampleMoments(benchmark::State& state) {
  SampleSpec spec;
  spec.matrix_size = static_cast<int>(state.range(0));
  spec.samples = static_cast<int>(state.range(1));
  spec.max_degree = 4;
  for (auto _ : state) benchmark::DoNotOptimize(sample_moments(spec, 1));
}
BENCHMARK(BM_SampleMoments)->Args({100, 10})->Args({200, 10})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
