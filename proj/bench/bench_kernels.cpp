#include <benchmark/benchmark.h>

#include "artin/batteries.hpp"
#include "artin/curvature.hpp"
#include "artin/cycles.hpp"
#include "artin/forbidden.hpp"
#include "artin/link.hpp"

namespace {

using namespace artin;

DefiningGraph complete_graph(int n, int label) {
  DefiningGraph g;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.add_edge(GeneratorId("v" + std::to_string(i)), GeneratorId("v" + std::to_string(j)), label,
                 Orientation::Unoriented);
  return g;
}

DefiningGraph directed_complete(int n, int label) {
  DefiningGraph g;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.add_edge(GeneratorId("v" + std::to_string(i)), GeneratorId("v" + std::to_string(j)), label,
                 (i + j) % 2 ? Orientation::Forward : Orientation::Backward);
  return g;
}

void BM_girth_serial(benchmark::State& s) {
  const auto l = build_link(directed_complete(static_cast<int>(s.range(0)), 5));
  for (auto _ : s) benchmark::DoNotOptimize(serial::girth(l));
}

void BM_girth_parallel(benchmark::State& s) {
  const auto l = build_link(directed_complete(static_cast<int>(s.range(0)), 5));
  for (auto _ : s) benchmark::DoNotOptimize(girth(l));
}

void angle_setup(int n, LinkGraph& l, std::vector<PiAngle>& angles) {
  const auto k = build_complex(build_triangular(directed_complete(n, 5)));
  l = build_link(k);
  angles = assign_metric(k, l, MetricScheme::A2).link_angles;
}

void BM_angle_serial(benchmark::State& s) {
  LinkGraph l;
  std::vector<PiAngle> a;
  angle_setup(static_cast<int>(s.range(0)), l, a);
  for (auto _ : s) benchmark::DoNotOptimize(serial::min_angle_cycle(l, a));
}

void BM_angle_parallel(benchmark::State& s) {
  LinkGraph l;
  std::vector<PiAngle> a;
  angle_setup(static_cast<int>(s.range(0)), l, a);
  for (auto _ : s) benchmark::DoNotOptimize(min_angle_cycle(l, a));
}

void BM_search_serial(benchmark::State& s) {
  const auto g = complete_graph(static_cast<int>(s.range(0)), 3);
  for (auto _ : s) benchmark::DoNotOptimize(search_orientation(g));
}

void BM_search_parallel(benchmark::State& s) {
  const auto g = complete_graph(static_cast<int>(s.range(0)), 3);
  for (auto _ : s) benchmark::DoNotOptimize(search_orientation_parallel(g));
}

void BM_oracle_sweep(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(battery_forbidden_oracle(static_cast<std::size_t>(s.range(0)), {3}, false));
}

}  // namespace

BENCHMARK(BM_girth_serial)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_girth_parallel)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_angle_serial)->Arg(4)->Arg(6);
BENCHMARK(BM_angle_parallel)->Arg(4)->Arg(6);
BENCHMARK(BM_search_serial)->Arg(4)->Arg(5)->Arg(6);
BENCHMARK(BM_search_parallel)->Arg(4)->Arg(5)->Arg(6);
BENCHMARK(BM_oracle_sweep)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
