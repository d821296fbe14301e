// Serial reference vs OpenMP kernels on zone-folded band sampling.

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "cnt/bands.hpp"
#include "cnt/kernels.hpp"

namespace {

using namespace cnt;

std::vector<kernels::LineSample> make_samples(const TubeSymmetry& sym, const BandParams& p, int per_line) {
  std::vector<kernels::LineSample> out;
  for (std::int64_t m = 0; m < sym.n; ++m)
    for (double kappa : bands::line_grid(sym, m, per_line, p)) out.push_back({m, kappa});
  return out;
}

void BM_LineModulusSerial(benchmark::State& state) {
  const TubeSymmetry sym = tube::tube_symmetry(ChiralityVector(12, 0, -12));
  const BandParams p = BandParams::uniform();
  const auto samples = make_samples(sym, p, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::line_modulus_serial(sym, samples, p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples.size()));
}

void BM_LineModulusOmp(benchmark::State& state) {
  const TubeSymmetry sym = tube::tube_symmetry(ChiralityVector(12, 0, -12));
  const BandParams p = BandParams::uniform();
  const auto samples = make_samples(sym, p, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::line_modulus_omp(sym, samples, p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples.size()));
}

std::vector<double> beta_grid(const TubeSymmetry& sym, int count) {
  const double period = bands::aharonov_bohm_period(sym, kDefaultScale);
  std::vector<double> b(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) b[static_cast<std::size_t>(i)] = period * double(i) / double(count - 1);
  return b;
}

void BM_GapSweepSerial(benchmark::State& state) {
  const TubeSymmetry sym = tube::tube_symmetry(ChiralityVector(4, -2, -2));
  const auto betas = beta_grid(sym, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::gap_sweep_serial(sym, 1.0, kDefaultScale, betas, 1024));
}

void BM_GapSweepOmp(benchmark::State& state) {
  const TubeSymmetry sym = tube::tube_symmetry(ChiralityVector(4, -2, -2));
  const auto betas = beta_grid(sym, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::gap_sweep_omp(sym, 1.0, kDefaultScale, betas, 1024));
}

}  // namespace

BENCHMARK(BM_LineModulusSerial)->Arg(1024)->Arg(4096)->Arg(16384);
BENCHMARK(BM_LineModulusOmp)->Arg(1024)->Arg(4096)->Arg(16384);
BENCHMARK(BM_GapSweepSerial)->Arg(21)->Arg(101);
BENCHMARK(BM_GapSweepOmp)->Arg(21)->Arg(101);

BENCHMARK_MAIN();
