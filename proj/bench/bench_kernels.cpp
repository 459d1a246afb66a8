// Serial reference against OpenMP for the data-parallel kernels.

#include "spindeph/register_errors.hpp"
#include "spindeph/stochastic_sim.hpp"
#include "spindeph/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace spindeph;

namespace {

SimulationPlan bench_plan() {
  SimulationPlan p = markovian_regime_plan(1);
  p.n_trajectories = 1000;
  return p;
}

ExecutionPolicy policy_arg(const benchmark::State& state) {
  return state.range(0) == 0 ? ExecutionPolicy::serial() : ExecutionPolicy::openmp(static_cast<int>(state.range(0)));
}

void BM_EnsembleCoherence(benchmark::State& state) {
  const auto plan = bench_plan();
  const auto policy = policy_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(ensemble_coherence(plan, policy));
  state.SetItemsProcessed(state.iterations() * plan.n_trajectories * plan.n_steps);
}

void BM_EnsembleAverageState(benchmark::State& state) {
  const ErrorSampler sampler{0.05, 0.05, 0.05, 1};
  const auto policy = policy_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(ensemble_average_state(sampler, 100000, policy));
  state.SetItemsProcessed(state.iterations() * 100000);
}

void BM_Sweep(benchmark::State& state) {
  PhononRamanChannel ph;
  const SweepSpec spec{ph, "temperature", Grid::parse("0.1:600:256:log"), Convention::Static};
  const auto policy = policy_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, policy));
  state.SetItemsProcessed(state.iterations() * 256);
}

// Argument 0 is the serial reference; n > 0 is OpenMP with n threads.
void thread_args(benchmark::internal::Benchmark* b) {
  for (int t : {0, 1, 2, 4, 8}) b->Arg(t);
}

}  // namespace

BENCHMARK(BM_EnsembleCoherence)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnsembleAverageState)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Sweep)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
