// Parallel kernels against the serial reference on the same lattices.

#include <benchmark/benchmark.h>

#include "dycklat/kernels.hpp"
#include "dycklat/reference.hpp"

using namespace dycklat;

namespace {

FamilyParam family(std::int64_t code) { return code == 0 ? FamilyParam::infinity() : FamilyParam::finite(static_cast<int>(code)); }

void BM_AllIntervalsParallel(benchmark::State& state) {
  const Lattice lat(static_cast<int>(state.range(0)), family(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_all_intervals(lat));
}

void BM_AllIntervalsSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::count_intervals(static_cast<int>(state.range(0)), family(state.range(1)), IntervalKind::All));
  }
}

void BM_LinearParallel(benchmark::State& state) {
  const Lattice lat(static_cast<int>(state.range(0)), family(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_linear_intervals(lat));
}

void BM_LinearSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::count_intervals(static_cast<int>(state.range(0)), family(state.range(1)), IntervalKind::Linear));
  }
}

void BM_BooleanParallel(benchmark::State& state) {
  const Lattice lat(static_cast<int>(state.range(0)), family(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_boolean_intervals(lat));
}

void BM_BooleanSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::count_intervals(static_cast<int>(state.range(0)), family(state.range(1)), IntervalKind::Boolean));
  }
}

void BM_MobiusParallel(benchmark::State& state) {
  const Lattice lat(static_cast<int>(state.range(0)), family(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mobius_sweep(lat));
}

void BM_MobiusSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::mobius_sweep(static_cast<int>(state.range(0)), family(state.range(1))));
  }
}

void BM_LatticeBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Lattice(static_cast<int>(state.range(0)), family(state.range(1))));
}

// second argument: descent bound, 0 for unbounded
const std::vector<std::vector<std::int64_t>> kSizes = {{8, 10, 12}, {2, 0}};

}  // namespace

BENCHMARK(BM_AllIntervalsParallel)->ArgsProduct(kSizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllIntervalsSerial)->ArgsProduct(kSizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinearParallel)->ArgsProduct(kSizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinearSerial)->ArgsProduct({{8, 10}, {2, 0}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BooleanParallel)->ArgsProduct(kSizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BooleanSerial)->ArgsProduct({{8, 10}, {2, 0}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MobiusParallel)->ArgsProduct({{6, 8}, {2, 0}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MobiusSerial)->ArgsProduct({{6, 8}, {2, 0}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LatticeBuild)->ArgsProduct({{12, 16, 20}, {2, 0}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
