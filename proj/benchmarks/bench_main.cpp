#include <benchmark/benchmark.h>

#include "fractalscape/landscape.hpp"
#include "fractalscape/operator.hpp"
#include "fractalscape/persistence.hpp"
#include "fractalscape/presets.hpp"
#include "fractalscape/verify.hpp"

using namespace fractalscape;

namespace {

PointCloud cantor_cloud(std::size_t n) {
  const AffineIfs ifs = preset("cantor3").ifs;
  return iterate(ifs, seed_points(ifs), n);
}

void BM_MstCantor(benchmark::State& state) {
  const PointCloud cloud = cantor_cloud(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mst_profile(cloud));
  state.counters["points"] = static_cast<double>(cloud.size());
}
BENCHMARK(BM_MstCantor)->DenseRange(6, 11, 1)->Unit(benchmark::kMillisecond);

void BM_MstCarpet(benchmark::State& state) {
  const AffineIfs ifs = preset("carpet").ifs;
  const PointCloud cloud = iterate(ifs, seed_points(ifs), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mst_profile(cloud));
  state.counters["points"] = static_cast<double>(cloud.size());
}
BENCHMARK(BM_MstCarpet)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

void BM_FixedPoint(benchmark::State& state) {
  const LandscapeOperator op = preset_operator("fifth");
  const auto levels = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fixed_point(op, levels));
}
BENCHMARK(BM_FixedPoint)->RangeMultiplier(4)->Range(16, 4096);

void BM_LandscapeKmax(benchmark::State& state) {
  const PersistenceDiagram d = h0_diagram(cantor_cloud(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(landscape_kmax(d));
}
BENCHMARK(BM_LandscapeKmax)->DenseRange(4, 10, 2);

void BM_LandscapeBirthsZero(benchmark::State& state) {
  const PersistenceDiagram d = h0_diagram(cantor_cloud(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(landscape_births_zero(d));
}
BENCHMARK(BM_LandscapeBirthsZero)->DenseRange(4, 10, 2);

void BM_SupDistance(benchmark::State& state) {
  const LandscapeOperator op = preset_operator("sixth");
  const auto levels = static_cast<std::size_t>(state.range(0));
  const Landscape a = fixed_point(op, levels);
  const Landscape b = apply_operator(op, Landscape::from_deaths({1.0}), levels);
  for (auto _ : state) benchmark::DoNotOptimize(sup_distance(a, b));
}
BENCHMARK(BM_SupDistance)->RangeMultiplier(8)->Range(8, 4096);

void BM_CommutationReport(benchmark::State& state) {
  const Preset p = preset("triangle");
  const auto n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(commutation_report(p.ifs, p.op, n_max));
}
BENCHMARK(BM_CommutationReport)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
