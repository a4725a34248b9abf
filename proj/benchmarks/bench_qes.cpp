#include <qes/families.hpp>
#include <qes/roots.hpp>
#include <qes/spectrum.hpp>

#include <benchmark/benchmark.h>

using namespace qes;

namespace {

void BM_ConditionPolynomial(benchmark::State& state) {
  const QESProblem prob{static_cast<int>(state.range(0)), Parity::even};
  for (auto _ : state) {
    auto poly = condition_polynomial(prob);
    benchmark::DoNotOptimize(poly);
  }
}
BENCHMARK(BM_ConditionPolynomial)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_IsolateShifts(benchmark::State& state) {
  const auto rc = reduced_condition({static_cast<int>(state.range(0)), Parity::even});
  for (auto _ : state) {
    auto roots = isolate_real_roots(rc.poly);
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(BM_IsolateShifts)->Arg(4)->Arg(8)->Arg(12);

void BM_Solve(benchmark::State& state) {
  const QESProblem prob{static_cast<int>(state.range(0)), Parity::even};
  for (auto _ : state) {
    auto sols = solve(prob, 12);
    benchmark::DoNotOptimize(sols);
  }
}
BENCHMARK(BM_Solve)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_Eigensolve(benchmark::State& state) {
  const SpectrumRequest request{-1.0, 11.0, static_cast<int>(state.range(0)), 6};
  for (auto _ : state) {
    auto report = lowest_eigenvalues(request);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_Eigensolve)->Arg(1000)->Arg(2000)->Arg(4000);

}  // namespace

BENCHMARK_MAIN();
