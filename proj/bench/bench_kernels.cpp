// Serial reference vs OpenMP kernel for the three batch computations.

#include <benchmark/benchmark.h>

#include "legsurg/brieskorn/brieskorn.hpp"
#include "legsurg/handle/handle.hpp"

namespace {

using namespace legsurg;

void BM_PairsSerial(benchmark::State& state) {
  const auto cs = brieskorn::enumerate(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brieskorn::compare_all_pairs_serial(cs));
}

void BM_PairsParallel(benchmark::State& state) {
  const auto cs = brieskorn::enumerate(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brieskorn::compare_all_pairs(cs));
}

void BM_PositivitySerial(benchmark::State& state) {
  const auto pts = handle::sample_x_minus(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(handle::contact_positivity_batch_serial(pts));
}

void BM_PositivityParallel(benchmark::State& state) {
  const auto pts = handle::sample_x_minus(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(handle::contact_positivity_batch(pts));
}

void BM_IdentitiesSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pts = handle::random_points(n, 1);
  const auto as = handle::random_parameters(n, 1);
  const auto& h = handle::standard_handle_data();
  for (auto _ : state) benchmark::DoNotOptimize(handle::evaluate_identities_batch_serial(h, pts, as));
}

void BM_IdentitiesParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pts = handle::random_points(n, 1);
  const auto as = handle::random_parameters(n, 1);
  const auto& h = handle::standard_handle_data();
  for (auto _ : state) benchmark::DoNotOptimize(handle::evaluate_identities_batch(h, pts, as));
}

}  // namespace

BENCHMARK(BM_PairsSerial)->Arg(20)->Arg(40)->Arg(60);
BENCHMARK(BM_PairsParallel)->Arg(20)->Arg(40)->Arg(60);
BENCHMARK(BM_PositivitySerial)->Arg(200)->Arg(1000);
BENCHMARK(BM_PositivityParallel)->Arg(200)->Arg(1000);
BENCHMARK(BM_IdentitiesSerial)->Arg(100)->Arg(400);
BENCHMARK(BM_IdentitiesParallel)->Arg(100)->Arg(400);

BENCHMARK_MAIN();
