// Serial reference kernels vs the OpenMP lanes on the two sampling sweeps
// that dominate runtime. Both lanes produce identical reports; this target
// only compares their speed.

#include <benchmark/benchmark.h>

#include "schur_ample/universal.hpp"

using namespace schur_ample;

namespace {

void bench_star_sweep(benchmark::State& state, ExecMode mode) {
  Instance inst(3, 2, 3, 1, 1);
  SplitMix64 rng(1);
  auto a = random_params<Rat>(inst, rng, 50);
  StratumLabel label{{0}, std::nullopt};
  for (auto _ : state) {
    auto rep = check_star<Rat>(inst, a, label, 64, 9, 50, mode);
    benchmark::DoNotOptimize(rep.full_rank);
  }
}

void bench_rank_oracle(benchmark::State& state, ExecMode mode) {
  Instance inst(3, 2, 3, 1, 1);
  StratumLabel label{{0}, std::vector<int>{}};
  SplitMix64 rng(3);
  for (auto _ : state) {
    auto ranks = map_indexed<long>(16, mode, [&](std::size_t i) {
      SplitMix64 local = rng.split(i);
      auto fr = sample_sigma<Rat>(inst, label, local, 50);
      return rank_via_sparse(phi_eta_matrix(inst, fr));
    });
    benchmark::DoNotOptimize(ranks.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(bench_star_sweep, serial, ExecMode::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_star_sweep, openmp, ExecMode::openmp)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_rank_oracle, serial, ExecMode::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_rank_oracle, openmp, ExecMode::openmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
