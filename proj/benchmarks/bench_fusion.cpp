#include <benchmark/benchmark.h>

#include "fusionkit/catalog.hpp"
#include "fusionkit/fusion_checks.hpp"
#include "fusionkit/fusion_subsystems.hpp"
#include "fusionkit/group_ops.hpp"
#include "fusionkit/linking_system.hpp"
#include "fusionkit/local_analysis.hpp"

using namespace fusionkit;

namespace {

void BM_GroupTable(benchmark::State& state) {
  std::string const spec = "sym:" + std::to_string(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_group(spec));
}
BENCHMARK(BM_GroupTable)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Sylow(benchmark::State& state) {
  auto G = Subgroup::whole(build_group("sym:" + std::to_string(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(sylow_subgroup(G, 2));
}
BENCHMARK(BM_Sylow)->Arg(6)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_SubgroupLattice(benchmark::State& state) {
  auto ex = example_weakly_normal();
  for (auto _ : state) benchmark::DoNotOptimize(SubgroupLattice::enumerate(ex.S, 2));
}
BENCHMARK(BM_SubgroupLattice)->Unit(benchmark::kMillisecond);

void BM_RealizedFusion(benchmark::State& state) {
  auto G = Subgroup::whole(build_group("sym:" + std::to_string(state.range(0))));
  auto S = sylow_subgroup(G, 2);
  auto L = SubgroupLattice::enumerate(S, 2);
  for (auto _ : state) benchmark::DoNotOptimize(FusionSystem::realized(G, L));
}
BENCHMARK(BM_RealizedFusion)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Saturation(benchmark::State& state) {
  auto G = Subgroup::whole(build_group("sym:6"));
  auto F = FusionSystem::realized(G, sylow_subgroup(G, 2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_saturated(F));
}
BENCHMARK(BM_Saturation)->Unit(benchmark::kMillisecond);

void BM_CentralizerDirect(benchmark::State& state) {
  auto pr = build_pair("pair:(sym:6,alt:6,2)");
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_subgroup_direct(pr.F, pr.E));
}
BENCHMARK(BM_CentralizerDirect)->Unit(benchmark::kMillisecond);

void BM_CentralizerLocal(benchmark::State& state) {
  auto pr = build_pair("pair:(sym:6,alt:6,2)");
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_subgroup_local(pr));
}
BENCHMARK(BM_CentralizerLocal)->Unit(benchmark::kMillisecond);

void BM_LinkingSystem(benchmark::State& state) {
  auto pr = build_pair("pair:(sym:6,alt:6,2)");
  for (auto _ : state) benchmark::DoNotOptimize(LinkingSystem::build(pr.F));
}
BENCHMARK(BM_LinkingSystem)->Unit(benchmark::kMillisecond);

void BM_Hyperfocal(benchmark::State& state) {
  auto ex = example_weakly_normal();
  for (auto _ : state) benchmark::DoNotOptimize(hyperfocal(ex.F));
}
BENCHMARK(BM_Hyperfocal)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
