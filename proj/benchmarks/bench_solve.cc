#include <benchmark/benchmark.h>

#include "parimutuel/equilibrium.hpp"
#include "parimutuel/oracle.hpp"
#include "parimutuel/stackelberg.hpp"

namespace {

using namespace parimutuel;

void BM_SolveWedge(benchmark::State& state) {
  const auto m = BeliefMeasure::wedge(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve({0.8, 0.9, 1.0}, m).p_star);
  }
}
BENCHMARK(BM_SolveWedge)->Arg(1)->Arg(10)->Arg(100);

void BM_SolveGaussianMixture(benchmark::State& state) {
  const auto m = BeliefMeasure::gaussian_mixture({0.5, 0.3, 0.2}, {0.15, 0.55, 0.9}, {0.05, 0.08, 0.04});
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve({0.8, 0.6, 0.5}, m).p_star);
  }
}
BENCHMARK(BM_SolveGaussianMixture)->Unit(benchmark::kMillisecond);

void BM_MassQuadrature(benchmark::State& state) {
  const auto m = BeliefMeasure::gaussian_mixture({0.5, 0.3, 0.2}, {0.15, 0.55, 0.9}, {0.05, 0.08, 0.04});
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.mass_by_quadrature(0.003, 0.77));
  }
}
BENCHMARK(BM_MassQuadrature);

void BM_OptimizeTake(benchmark::State& state) {
  const auto m = BeliefMeasure::wedge(100);
  const TakeSearchOptions opts{.grid_points = static_cast<int>(state.range(0)), .workers = 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_take(m, 1.0, 1.0, opts).kappa_star);
  }
}
BENCHMARK(BM_OptimizeTake)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const auto pop = discretize(BeliefMeasure::wedge(10), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate_best_response(pop, {0.8, 0.95, 1.0}).p_approx);
  }
}
BENCHMARK(BM_Oracle)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
