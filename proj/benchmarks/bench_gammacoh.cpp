#include <benchmark/benchmark.h>

#include <random>

#include "gammacoh/characteristic_classes.hpp"

using namespace gammacoh;

namespace {

QMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  QMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(dist(rng));
  return m;
}

IntMatrix2 long_word(unsigned length) {
  IntMatrix2 g;
  for (unsigned i = 0; i < length; ++i) g = g * (i % 3 ? generators::T() : generators::S());
  return g;
}

}  // namespace

static void BM_Rref(benchmark::State& state) {
  const QMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(8, 64);

static void BM_ActionMatrix(benchmark::State& state) {
  const IntMatrix2 g = long_word(12);
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(action_matrix(g, k, Variant::dual));
}
BENCHMARK(BM_ActionMatrix)->Arg(4)->Arg(16)->Arg(40);

static void BM_Sl2zWord(benchmark::State& state) {
  const IntMatrix2 g = long_word(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sl2z_word(g));
}
BENCHMARK(BM_Sl2zWord)->Arg(16)->Arg(64)->Arg(256);

static void BM_H1Sl2z(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h1(GroupName::SL2Z, 2 * m, Variant::dual).dimension());
}
BENCHMARK(BM_H1Sl2z)->Arg(1)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_H1Theta(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h1(GroupName::Theta, 2 * m, Variant::dual).dimension());
}
BENCHMARK(BM_H1Theta)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Shapiro(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shapiro_h1(2 * m, Variant::dual));
}
BENCHMARK(BM_Shapiro)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SpanningRank(benchmark::State& state) {
  const auto radius = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spanning_rank(GroupName::Theta, 3, radius).rank);
}
BENCHMARK(BM_SpanningRank)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_PoincareSeries(benchmark::State& state) {
  const auto terms = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(poincare_coefficients(1, SeriesVariant::corrected_sl2z, terms).coefficients.size());
}
BENCHMARK(BM_PoincareSeries)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
