// Serial reference vs OpenMP kernels on the same communities.

#include "succession/axioms.hpp"
#include "succession/generators.hpp"
#include "succession/relations.hpp"
#include "succession/representation.hpp"

#include <benchmark/benchmark.h>

using namespace succession;

namespace {

Community additive(std::size_t agents, std::size_t levels) {
  std::mt19937_64 rng(11);
  return synthesize_from_matrix(integer_grid(agents, levels), coordinate_interests(agents),
                                random_certifiable_representation(rng, agents));
}

void BM_coincidence_serial(benchmark::State& state) {
  const Community c = additive(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coincidence_report_serial(c));
}

void BM_coincidence_parallel(benchmark::State& state) {
  const Community c = additive(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coincidence_report(c));
}

void BM_separability_serial(benchmark::State& state) {
  const Community c = additive(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_separability_serial(c));
}

void BM_separability_parallel(benchmark::State& state) {
  const Community c = additive(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_separability(c));
}

}  // namespace

BENCHMARK(BM_coincidence_serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coincidence_parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_separability_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_separability_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
