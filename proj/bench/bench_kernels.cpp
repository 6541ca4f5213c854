// Serial reference vs OpenMP kernels. Both versions return identical results;
// this measures only the cost.

#include <benchmark/benchmark.h>

#include <random>

#include "jmspin/boundary.hpp"
#include "jmspin/measurability.hpp"
#include "jmspin/sampling.hpp"

namespace {

using namespace jmspin;

const BinaryObservable kP = sharp_spin({0, 0, 1});
const BinaryObservable kA = effect_from_parameters(0.9, {0.1, 0.2, 0.5});

std::vector<ObservablePair> random_pairs(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  std::vector<ObservablePair> pairs;
  while (pairs.size() < n) {
    const BlochVector a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)};
    if (a.norm() > 1.0 || b.norm() > 1.0) continue;
    pairs.push_back({effect_from_parameters(1.0, a), effect_from_parameters(1.0, b)});
  }
  return pairs;
}

void BM_DeviationSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_deviation_serial(kP, kA, state.range(0)));
}
void BM_DeviationParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_deviation(kP, kA, state.range(0)));
}
BENCHMARK(BM_DeviationSerial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeviationParallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_FeasibilitySerial(benchmark::State& state) {
  const auto pairs = random_pairs(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(joint_feasibility_batch_serial(pairs));
}
void BM_FeasibilityParallel(benchmark::State& state) {
  const auto pairs = random_pairs(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(joint_feasibility_batch(pairs));
}
BENCHMARK(BM_FeasibilitySerial)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FeasibilityParallel)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SweepSerial(benchmark::State& state) {
  const ProblemInstance inst = ProblemInstance::from_degrees(60);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_curve_serial(inst, Metric::Statistical, state.range(0)));
}
void BM_SweepParallel(benchmark::State& state) {
  const ProblemInstance inst = ProblemInstance::from_degrees(60);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_curve(inst, Metric::Statistical, state.range(0)));
}
BENCHMARK(BM_SweepSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_RmsGridSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rms_noise_grid_sup_serial(kP, kA, state.range(0)));
}
void BM_RmsGridParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rms_noise_grid_sup(kP, kA, state.range(0)));
}
BENCHMARK(BM_RmsGridSerial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RmsGridParallel)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
