#include <benchmark/benchmark.h>

#include "cosetcover/analysis.hpp"
#include "cosetcover/corpus.hpp"
#include "cosetcover/model.hpp"
#include "cosetcover/search.hpp"
#include "cosetcover/subgroup.hpp"
#include "cosetcover/verifiers.hpp"

using namespace cosetcover;

namespace {

void BM_RegularityPartition(benchmark::State& state) {
  const auto inst = cosetsystem_to_instance(example21(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_regular(inst, true));
}
BENCHMARK(BM_RegularityPartition)->DenseRange(3, 6);

void BM_MinimalSingleDeletion(benchmark::State& state) {
  const auto inst = zsystem_to_instance(classic_cover());
  for (auto _ : state) benchmark::DoNotOptimize(is_minimal_m_cover(inst, 1));
}
BENCHMARK(BM_MinimalSingleDeletion);

void BM_MinimalExhaustive(benchmark::State& state) {
  const auto inst = zsystem_to_instance(classic_cover());
  for (auto _ : state) benchmark::DoNotOptimize(is_minimal_m_cover_exhaustive(inst, 1));
}
BENCHMARK(BM_MinimalExhaustive);

void BM_SubgroupLattice(benchmark::State& state) {
  const char* specs[] = {"D8", "Z2xZ2xZ2xZ2", "S4", "A5"};
  const auto g = make_group(specs[state.range(0)]);
  state.SetLabel(specs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(g, g.order()).size());
}
BENCHMARK(BM_SubgroupLattice)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_SearchMinimalZ(benchmark::State& state) {
  SearchSpec spec;
  spec.max_period = static_cast<std::uint64_t>(state.range(0));
  spec.max_k = 5;
  for (auto _ : state) {
    std::size_t n = 0;
    enumerate(spec, [&](const Found&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_SearchMinimalZ)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_SearchGroupCover(benchmark::State& state) {
  SearchSpec spec;
  spec.target = SearchSpec::Target::group;
  spec.group = "Z2xD4";
  spec.max_k = 3;
  spec.predicate = Predicate::cover;
  for (auto _ : state) {
    std::size_t n = 0;
    enumerate(spec, [&](const Found&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_SearchGroupCover)->Unit(benchmark::kMillisecond);

void BM_HuntDisjointGcd(benchmark::State& state) {
  SearchSpec spec;
  spec.max_period = 24;
  spec.max_k = 4;
  for (auto _ : state) benchmark::DoNotOptimize(hunt(spec, "c1.2").examined);
}
BENCHMARK(BM_HuntDisjointGcd)->Unit(benchmark::kMillisecond);

void BM_VerifyAllClassic(benchmark::State& state) {
  ZModel model(classic_cover());
  for (auto _ : state)
    for (const auto& s : statements()) benchmark::DoNotOptimize(run_statement(s.id, model).checks.size());
}
BENCHMARK(BM_VerifyAllClassic)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
