#include "orbisym/coset_enum.hpp"
#include "orbisym/perm_group.hpp"
#include "orbisym/z2_hom.hpp"

#include <benchmark/benchmark.h>

namespace {

using orbisym::Strategy;

const orbisym::Presentation& orbifold28() {
  static const auto p =
      orbisym::load_presentation("generators: x y z\nrelators: x^5 y^2 z^2 (x*z)^3 (x*y)^2 (y*z^-1)^2\n");
  return p;
}

void BM_RegularRep(benchmark::State& state) {
  const auto strategy = static_cast<Strategy>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orbisym::group_order(orbifold28(), {}, strategy));
}
BENCHMARK(BM_RegularRep)->Arg(static_cast<int>(Strategy::Hlt))->Arg(static_cast<int>(Strategy::Felsch));

void BM_SubgroupIndex(benchmark::State& state) {
  const auto h = orbifold28().parse_list("x*y, x*y*x^-1");
  for (auto _ : state) benchmark::DoNotOptimize(orbisym::subgroup_index(orbifold28(), h));
}
BENCHMARK(BM_SubgroupIndex);

// Abelian covers grow as n^2; the regular representation of the largest family member.
void BM_Family19Order(benchmark::State& state) {
  const auto p = orbisym::family_19(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(orbisym::group_order(p));
  state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_Family19Order)->RangeMultiplier(2)->Range(4, 64)->Complexity(benchmark::oN);

// Tight table forces repeated lookahead and compaction.
void BM_TightTable(benchmark::State& state) {
  const orbisym::EnumerationLimits limits{.max_cosets = static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(orbisym::group_order(orbifold28(), limits));
}
BENCHMARK(BM_TightTable)->Arg(300)->Arg(1000)->Arg(100000);

void BM_ElementClosure(benchmark::State& state) {
  const auto g = orbisym::permutation_rep(orbisym::enumerate(orbifold28(), {}));
  for (auto _ : state) benchmark::DoNotOptimize(orbisym::enumerate_elements(g).size());
}
BENCHMARK(BM_ElementClosure);

void BM_Z2Solve(benchmark::State& state) {
  const auto& p = orbifold28();
  const std::vector<orbisym::Z2Constraint> c{{p.parse("x*y*z^-1*x^-1"), true}, {p.parse("x*y*x^-1"), true},
                                             {p.parse("x*y"), true}};
  for (auto _ : state) benchmark::DoNotOptimize(orbisym::solve_hom_to_z2(p, c).solvable);
}
BENCHMARK(BM_Z2Solve);

}  // namespace
