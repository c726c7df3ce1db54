#include <benchmark/benchmark.h>

#include "lpq/partial_theta.hpp"
#include "lpq/series.hpp"
#include "lpq/sturm.hpp"
#include "lpq/winding.hpp"

namespace {

lpq::RealPolynomial theta_section(int n) { return lpq::scaled_section(lpq::Rational(31, 10), n); }

void BM_SturmReport(benchmark::State& state) {
  const auto p = theta_section(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpq::hyperbolicity_report(p));
  }
}
BENCHMARK(BM_SturmReport)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

void BM_ComputeCn(benchmark::State& state) {
  const lpq::Rational tol(1, 1000000000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpq::compute_cn(static_cast<int>(state.range(0)), tol));
  }
}
BENCHMARK(BM_ComputeCn)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ThetaEval(benchmark::State& state) {
  const auto params = lpq::ThetaParams::from_a2(lpq::Rational(323, 100));
  const lpq::Rational x(-4);
  lpq::Rational tol(1);
  for (int i = 0; i < state.range(0); ++i) {
    tol /= 10;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpq::theta_eval(params, x, tol));
  }
}
BENCHMARK(BM_ThetaEval)->Arg(10)->Arg(30)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_WindingNumber(benchmark::State& state) {
  const auto f = lpq::ComplexFunction::from_polynomial(theta_section(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpq::winding_number(f, lpq::Rational(3)));
  }
}
BENCHMARK(BM_WindingNumber)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
