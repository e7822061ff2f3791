#include "nps7/assembly.hpp"
#include "nps7/fixtures.hpp"
#include "nps7/linsolve.hpp"
#include "nps7/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Build(benchmark::State& state) {
  const auto ex = nps7::fixtures::example1();
  const auto params = nps7::optimal_family(0);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nps7::build(ex.problem, params, nps7::EndConditionMode::Improved, n));
  }
}
BENCHMARK(BM_Build)->Arg(12)->Arg(48)->Arg(96)->Arg(384);

void BM_BuildAndSolve(benchmark::State& state) {
  const auto ex = nps7::fixtures::example1();
  const auto params = nps7::optimal_family(0);
  const int n = static_cast<int>(state.range(0));
  const auto precision =
      state.range(1) == 0 ? nps7::Precision::Double : nps7::Precision::Extended;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nps7::solve_spline(ex.problem, params, nps7::EndConditionMode::Improved, n, precision));
  }
}
BENCHMARK(BM_BuildAndSolve)->ArgsProduct({{12, 24, 48, 96}, {0, 1}});

void BM_RkSolve(benchmark::State& state) {
  const auto ex = nps7::fixtures::example1();
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nps7::rk_solve(ex.problem, steps));
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_RkSolve)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
