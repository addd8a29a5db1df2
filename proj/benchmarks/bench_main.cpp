#include <cmath>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "cfpop/examples.hpp"
#include "cfpop/flat_metric.hpp"
#include "cfpop/stepper.hpp"

using namespace cfpop;

namespace {

AtomicMeasure comb(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> gap(0.01, 0.2), w(0.0, 2.0);
  AtomicMeasure a;
  double x = 0.0;
  for (int i = 0; i < n; ++i) {
    x += gap(rng);
    a.site.push_back(x);
    a.weight.push_back(w(rng));
  }
  return a;
}

struct StepSetup {
  ProblemSpec spec;
  DiscreteKernels kern;
  GridMeasure mu;

  explicit StepSetup(int J) {
    ExampleDef ex = find_example("3");
    spec = ex.problem;
    GridSpec grid = GridSpec::make(ex.x_max, J);
    kern = discretize_kernels(spec, grid);
    mu = project_initial(ex.initial, grid);
  }
};

void bm_flat_distance(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  AtomicMeasure a = comb(n, 1), b = comb(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(flat_distance(a, b));
}

void bm_step_explicit(benchmark::State& state) {
  StepSetup s(static_cast<int>(state.range(0)));
  StepWorkspace ws;
  double dt = 1e-4;
  for (auto _ : state) benchmark::DoNotOptimize(step_explicit(s.mu, 0.0, s.spec, s.kern, dt,
                                                              Limiter::standard, &ws));
}

void bm_step_semi_implicit(benchmark::State& state) {
  StepSetup s(static_cast<int>(state.range(0)));
  StepWorkspace ws;
  double dt = 1e-4;
  for (auto _ : state)
    benchmark::DoNotOptimize(step_semi_implicit(s.mu, 0.0, s.spec, s.kern, dt,
                                                Limiter::standard, &ws));
}

void bm_kernel_assembly(benchmark::State& state) {
  ExampleDef ex = find_example("3");
  GridSpec grid = GridSpec::make(ex.x_max, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(discretize_kernels(ex.problem, grid));
}

}  // namespace

BENCHMARK(bm_flat_distance)->Arg(100)->Arg(1000);
BENCHMARK(bm_step_explicit)->Arg(100)->Arg(400)->Arg(1600);
BENCHMARK(bm_step_semi_implicit)->Arg(100)->Arg(400)->Arg(1600);
BENCHMARK(bm_kernel_assembly)->Arg(100)->Arg(400);

BENCHMARK_MAIN();
