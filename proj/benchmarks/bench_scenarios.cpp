#include "orbisym/catalog.hpp"
#include "orbisym/scenario.hpp"

#include <benchmark/benchmark.h>

namespace {

orbisym::DashedArcScenario dashed() {
  const auto cases = orbisym::load_catalog(orbisym::builtin_catalog_text());
  return std::get<orbisym::DashedArcScenario>(orbisym::find_case(cases, "orbifold-28-dashed").scenario);
}

void BM_DashedSweep(benchmark::State& state) {
  const auto s = dashed();
  orbisym::SweepOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  options.early_stop = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(orbisym::evaluate_dashed_arc_scenario(s, options).surfaces.size());
}
BENCHMARK(BM_DashedSweep)->Args({1, 0})->Args({4, 0})->Args({1, 1})->UseRealTime();

void BM_FamilyRange(benchmark::State& state) {
  const auto family = static_cast<orbisym::Family>(state.range(0));
  for (auto _ : state) {
    for (int n = 3; n <= 50; ++n) {
      for (const auto e : orbisym::family_embeddings(family)) {
        benchmark::DoNotOptimize(orbisym::evaluate_family(family, n, e));
      }
    }
  }
}
BENCHMARK(BM_FamilyRange)
    ->Arg(static_cast<int>(orbisym::Family::F15E))
    ->Arg(static_cast<int>(orbisym::Family::F19))
    ->Unit(benchmark::kMillisecond);

void BM_VerifyTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(orbisym::verify_table().failures());
}
BENCHMARK(BM_VerifyTable)->Unit(benchmark::kMillisecond);

}  // namespace
