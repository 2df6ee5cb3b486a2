#include <benchmark/benchmark.h>

#include <random>

#include "trigvee/catalog.hpp"
#include "trigvee/families.hpp"
#include "trigvee/linalg.hpp"
#include "trigvee/veesystem.hpp"
#include "trigvee/wdvv_numeric.hpp"

using namespace trigvee;

namespace {

Configuration e8() { return generate({Family::E8, 0, {{"t", 1}}}); }

Configuration bc(std::size_t n) { return generate({Family::BC, n, {{"r", 1}, {"s", 2}, {"q", 3}}}); }

RatMatrix random_matrix(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<long> d(-9, 9);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(d(rng), 1 + (i + j) % 4);
  for (std::size_t i = 0; i < n; ++i) m(i, i) += Rational(40);
  return m;
}

}  // namespace

static void BM_Invert(benchmark::State& state) {
  const RatMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invert(m));
}
BENCHMARK(BM_Invert)->DenseRange(2, 8, 2);

static void BM_G2(benchmark::State& state) {
  const Configuration cfg = bc(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(g2(cfg));
}
BENCHMARK(BM_G2)->DenseRange(2, 6, 2);

static void BM_G2E8(benchmark::State& state) {
  const Configuration cfg = e8();
  for (auto _ : state) benchmark::DoNotOptimize(g2(cfg));
}
BENCHMARK(BM_G2E8)->Unit(benchmark::kMillisecond);

static void BM_VeeCheck(benchmark::State& state) {
  const Configuration cfg = bc(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vee_check(cfg));
}
BENCHMARK(BM_VeeCheck)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_VeeCheckE8(benchmark::State& state) {
  const Configuration cfg = e8();
  for (auto _ : state) benchmark::DoNotOptimize(vee_check(cfg));
}
BENCHMARK(BM_VeeCheckE8)->Unit(benchmark::kMillisecond);

static void BM_WdvvResidual(benchmark::State& state) {
  const Configuration cfg = e8();
  for (auto _ : state) benchmark::DoNotOptimize(wdvv_residual(cfg, Rational(900), 20, 42, 1e-8));
}
BENCHMARK(BM_WdvvResidual)->Unit(benchmark::kMillisecond);

static void BM_CatalogE7(benchmark::State& state) {
  const FamilySpec spec{Family::E7, 0, {{"t", 1}}};
  for (auto _ : state) benchmark::DoNotOptimize(build_catalog(spec, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CatalogE7)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
