// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "qfib/identities.hpp"
#include "qfib/poly_matrix.hpp"
#include "qfib/sweep.hpp"

using namespace qfib;

namespace {

PolyMatrix power_matrix(const benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  return strided_power_matrix(k, k, 1);
}

void BM_Det(benchmark::State& state) {
  const PolyMatrix m = power_matrix(state);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}

void BM_DetSerial(benchmark::State& state) {
  const PolyMatrix m = power_matrix(state);
  for (auto _ : state) benchmark::DoNotOptimize(det_serial(m));
}

std::vector<const IdentityEntry*> all_entries() {
  std::vector<const IdentityEntry*> out;
  for (const auto& e : catalog()) out.push_back(&e);
  return out;
}

SweepOptions sweep_options(int workers) {
  SweepOptions o;
  o.max_k = 2;
  o.max_ell = 2;
  o.workers = workers;
  return o;
}

void BM_Sweep(benchmark::State& state) {
  const auto entries = all_entries();
  const SweepOptions o = sweep_options(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(entries, o));
}

void BM_SweepSerial(benchmark::State& state) {
  const auto entries = all_entries();
  const SweepOptions o = sweep_options(1);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(entries, o));
}

}  // namespace

BENCHMARK(BM_Det)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
