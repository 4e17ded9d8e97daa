#include "gaugecool/cooling.hpp"
#include "gaugecool/dynamics.hpp"
#include "gaugecool/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace gaugecool;

namespace {

const ComplexMatrix& sample_state() {
  static const ComplexMatrix rho = [] {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> normal;
    ComplexMatrix a(kPlaquetteDim, 8);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = Complex(normal(rng), normal(rng));
    ComplexMatrix r = a * a.adjoint();
    return ComplexMatrix(r / r.trace());
  }();
  return rho;
}

void BM_CoolVertex(benchmark::State& state) {
  const auto& ops = default_cooler().local_channel(0).operators();
  const kernels::EdgeLayout layout = kernels::vertex_layout(0);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::apply_local_kraus(sample_state(), layout, ops));
}

void BM_CoolVertexSerial(benchmark::State& state) {
  const auto& ops = default_cooler().local_channel(0).operators();
  const kernels::EdgeLayout layout = kernels::vertex_layout(0);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::apply_local_kraus(sample_state(), layout, ops));
}

void BM_Depolarize(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::depolarize_edge(sample_state(), 1, 0.01));
}

void BM_DepolarizeSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::depolarize_edge(sample_state(), 1, 0.01));
}

void BM_AmplitudeDamping(benchmark::State& state) {
  const KrausChannel ch = amplitude_damping_kraus(0.01);
  const kernels::EdgeLayout layout({1});
  for (auto _ : state) benchmark::DoNotOptimize(kernels::apply_local_kraus(sample_state(), layout, ch.operators()));
}

void BM_AmplitudeDampingSerial(benchmark::State& state) {
  const KrausChannel ch = amplitude_damping_kraus(0.01);
  const kernels::EdgeLayout layout({1});
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::serial::apply_local_kraus(sample_state(), layout, ch.operators()));
}

void BM_SingletProbability(benchmark::State& state) {
  const ComplexMatrix p = default_cooler().basis(0).local_singlet_projector();
  const kernels::EdgeLayout layout = kernels::vertex_layout(0);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::local_expectation(sample_state(), layout, p));
}

void BM_SingletProbabilitySerial(benchmark::State& state) {
  const ComplexMatrix p = default_cooler().basis(0).local_singlet_projector();
  const kernels::EdgeLayout layout = kernels::vertex_layout(0);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::local_expectation(sample_state(), layout, p));
}

void BM_TrotterStep(benchmark::State& state) {
  const TrotterPropagator prop(1.0, 0.1);
  const DensityMatrix rho = DensityMatrix::adopt(sample_state());
  for (auto _ : state) benchmark::DoNotOptimize(prop.apply(rho));
}

void BM_TrotterStepSerial(benchmark::State& state) {
  const ComplexMatrix u = TrotterPropagator(1.0, 0.1).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::conjugate(u, sample_state()));
}

}  // namespace

BENCHMARK(BM_CoolVertex)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CoolVertexSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Depolarize)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DepolarizeSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AmplitudeDamping)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AmplitudeDampingSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SingletProbability)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SingletProbabilitySerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TrotterStep)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TrotterStepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
