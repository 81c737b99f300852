#include "pathideal/gf_rank.hpp"
#include "pathideal/linearity.hpp"
#include "pathideal/path_ideal.hpp"
#include "pathideal/resolution.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace pathideal;

namespace {

void BM_PowerGenerators(benchmark::State& state) {
  const PathIdealSpec spec(static_cast<std::uint32_t>(state.range(0)), 3);
  const auto s = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(power_generators(spec, s));
}
BENCHMARK(BM_PowerGenerators)->Args({9, 3})->Args({12, 4})->Args({16, 5});

void BM_IdealPower(benchmark::State& state) {
  const auto base = path_ideal(PathIdealSpec(static_cast<std::uint32_t>(state.range(0)), 3));
  const auto s = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ideal_power(base, s));
}
BENCHMARK(BM_IdealPower)->Args({9, 3})->Args({12, 4});

void BM_BitMatrixRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  BitMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng() & 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_BitMatrixRank)->Arg(128)->Arg(512);

void BM_ModMatrixRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  ModMatrix m(n, n, 3);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, static_cast<std::int64_t>(rng() % 3));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_ModMatrixRank)->Arg(128)->Arg(256);

void BM_BettiTable(benchmark::State& state) {
  const auto ideal = ideal_power(
      path_ideal(PathIdealSpec(static_cast<std::uint32_t>(state.range(0)),
                               static_cast<std::uint32_t>(state.range(1)))),
      static_cast<std::uint32_t>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(ideal, FieldSpec{2}));
}
BENCHMARK(BM_BettiTable)->Args({7, 3, 2})->Args({9, 2, 2})->Unit(benchmark::kMillisecond);

void BM_QuasiLinearCheck(benchmark::State& state) {
  const auto ideal = ideal_power(path_ideal(PathIdealSpec(8, 4)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(quasi_linear_check(ideal));
}
BENCHMARK(BM_QuasiLinearCheck);

} // namespace

BENCHMARK_MAIN();
