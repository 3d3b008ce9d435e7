#include <benchmark/benchmark.h>

#include "treeembed/asymptotics.hpp"
#include "treeembed/family.hpp"
#include "treeembed/generating.hpp"
#include "treeembed/oracle.hpp"

using namespace treeembed;

namespace {

void BM_SeriesProduct(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const IntSeries b = series_B(order);
  for (auto _ : state) benchmark::DoNotOptimize(b * b);
}
BENCHMARK(BM_SeriesProduct)->Arg(251)->Arg(1001);

void BM_Reciprocal(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const IntSeries t = series_T(order);
  const IntSeries one_minus_2t = IntSeries::constant(order, BigInt(1)) - t * BigInt(2);
  for (auto _ : state) benchmark::DoNotOptimize(one_minus_2t.reciprocal());
}
BENCHMARK(BM_Reciprocal)->Arg(251)->Arg(1001);

void BM_PlantedPlaneChain(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_A_planted_plane(make_chain(4), order));
}
BENCHMARK(BM_PlantedPlaneChain)->Arg(251)->Unit(benchmark::kMillisecond);

void BM_NonplaneCherry(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_A_nonplane_motzkin(parse_tree("(()())"), order));
}
BENCHMARK(BM_NonplaneCherry)->Arg(1001)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_family(Family::plane_binary, n));
}
BENCHMARK(BM_Enumerate)->Arg(15)->Arg(19)->Unit(benchmark::kMillisecond);

void BM_OracleFamily(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PlaneTree s = parse_tree("((())())");
  for (auto _ : state) benchmark::DoNotOptimize(count_in_family(s, Family::plane_binary, n));
}
BENCHMARK(BM_OracleFamily)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_Constants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_nonplane_constants());
}
BENCHMARK(BM_Constants)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
