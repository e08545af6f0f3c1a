#include <benchmark/benchmark.h>

#include <array>
#include <complex>

#include "pdem/bgcs.hpp"
#include "pdem/model.hpp"
#include "pdem/specfun.hpp"
#include "pdem/stats.hpp"

using namespace pdem;

static void BM_Hyper0f3(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        specfun::hyper0f3(1.0, 4.0 / 3.0, 4.0 / 3.0, x).value);
  }
}
BENCHMARK(BM_Hyper0f3)->Arg(1)->Arg(10)->Arg(100);

static void BM_MeijerGEval(benchmark::State& state) {
  const std::array<double, 4> b{0.0, 0.0, 1.0 / 3.0, 1.0 / 3.0};
  specfun::PrecisionConfig cfg;
  const specfun::MeijerG04 g(b, cfg);
  double y = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.value(y));
    y = y < 10.0 ? y * 1.1 : 0.1;
  }
}
BENCHMARK(BM_MeijerGEval);

static void BM_MeijerGContourBuild(benchmark::State& state) {
  const std::array<double, 4> b{0.0, 0.0, 1.0 / 3.0, 1.0 / 3.0};
  specfun::PrecisionConfig cfg;
  for (auto _ : state) {
    specfun::MeijerG04 g(b, cfg);
    benchmark::DoNotOptimize(g.value(1.0));
  }
}
BENCHMARK(BM_MeijerGContourBuild);

static void BM_MakeState(benchmark::State& state) {
  const std::complex<double> z{3.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bgcs::make_state(z, 1.5, state.range(0)));
  }
}
BENCHMARK(BM_MakeState)->Arg(200)->Arg(1000);

static void BM_Summarize(benchmark::State& state) {
  const std::complex<double> z{2.0, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(stats::summarize(z, 0.9));
  }
}
BENCHMARK(BM_Summarize);

static void BM_MomentCheck(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bgcs::moment_check(1.5, state.range(0)));
  }
}
BENCHMARK(BM_MomentCheck)->Arg(0)->Arg(5);

static void BM_Orbit(benchmark::State& state) {
  const auto p = model::OscillatorParams::make(1.0, 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(model::integrate_orbit(p, 1.0, 0.0, 1e-3, 20000));
  }
}
BENCHMARK(BM_Orbit);

BENCHMARK_MAIN();
