#include <benchmark/benchmark.h>

#include <cmath>
#include <dunkl/calculus.hpp>
#include <dunkl/heat.hpp>
#include <dunkl/oscillator.hpp>
#include <dunkl/schrodinger.hpp>
#include <dunkl/transform.hpp>

using namespace dunkl;

static void BM_TransformPlan(benchmark::State& state) {
  const MultiplicityParam m(1.0);
  auto g = gauss_grid(static_cast<std::size_t>(state.range(0)), 14.0, 1.0);
  for (auto _ : state) {
    TransformPlan plan(g, m, 1e-6);
    benchmark::DoNotOptimize(&plan);
  }
}
BENCHMARK(BM_TransformPlan)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_TransformForward(benchmark::State& state) {
  const MultiplicityParam m(1.0);
  auto g = gauss_grid(static_cast<std::size_t>(state.range(0)), 14.0, 1.0);
  TransformPlan plan(g, m, 1e-6);
  auto f = SampledFunction::sample(g, m, [](double x) { return (1 + x) * std::exp(-x * x / 2); });
  for (auto _ : state) benchmark::DoNotOptimize(forward(f, plan));
}
BENCHMARK(BM_TransformForward)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMicrosecond);

static void BM_HeatMultiplier(benchmark::State& state) {
  const MultiplicityParam m(1.0);
  auto g = gauss_grid(512, 14.0, 1.0);
  TransformPlan plan(g, m, 1e-6);
  auto f = SampledFunction::sample(g, m, [](double x) { return std::exp(-x * x); });
  for (auto _ : state) benchmark::DoNotOptimize(heat_apply(f, 0.5, plan));
}
BENCHMARK(BM_HeatMultiplier)->Unit(benchmark::kMicrosecond);

static void BM_HeatKernelPointwise(benchmark::State& state) {
  const MultiplicityParam m(2.5);
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(heat_kernel_K(0.7, x, 1.1, m));
    x += 1e-9;
  }
}
BENCHMARK(BM_HeatKernelPointwise);

static void BM_MehlerClosedForm(benchmark::State& state) {
  const MultiplicityParam m(1.0);
  const cplx z(0.5, 0.3);
  double x = 0.4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mehler_kernel(z, x, -1.2, m));
    x += 1e-9;
  }
}
BENCHMARK(BM_MehlerClosedForm);

static void BM_TrotterStep(benchmark::State& state) {
  const MultiplicityParam m(1.0);
  auto g = gauss_grid(512, 14.0, 1.0);
  TransformPlan plan(g, m, 1e-6);
  const auto v = Potential::from_label("x4");
  auto f = SampledFunction::sample(g, m, [](double x) { return std::exp(-x * x / 2); });
  for (auto _ : state) benchmark::DoNotOptimize(trotter_evolve(f, v, 1.0, static_cast<int>(state.range(0)), plan));
}
BENCHMARK(BM_TrotterStep)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_ContourCalculus(benchmark::State& state) {
  const auto t = hermite_section(MultiplicityParam(1.0), static_cast<std::size_t>(state.range(0)));
  const double mu = std::acos(-1.0) / 4;
  const auto xi = psi_symbol(mu);
  for (auto _ : state) benchmark::DoNotOptimize(psi_contour_calculus(t, xi, Sector(mu)));
}
BENCHMARK(BM_ContourCalculus)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
