#include <benchmark/benchmark.h>

#include "cfs/validation.hpp"

namespace {

cfs::ValidationConfig scenario2() {
  cfs::ValidationConfig cfg;
  cfg.arch = cfs::reference_architecture();
  cfg.orientation = cfs::Vec3(0.2534, 0.6740, 0.2653);
  cfg.r3 = 13.5;
  cfg.delta_r = 1.0;
  cfg.n_s = 2500;
  return cfg;
}

void BM_ValidateScenario2(benchmark::State& state) {
  const auto cfg = scenario2();
  const cfs::RunOptions opts{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(cfs::validate_cfs(cfg, opts));
}
BENCHMARK(BM_ValidateScenario2)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_EstimateScenario2(benchmark::State& state) {
  cfs::EstimateParams params;
  params.n_directions = static_cast<std::size_t>(state.range(0));
  params.r_max = 50.0;
  params.tol = 0.01;
  const auto arch = cfs::reference_architecture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cfs::estimate_cfs(arch, cfs::Vec3(0.2534, 0.6740, 0.2653), params));
  }
}
BENCHMARK(BM_EstimateScenario2)->Arg(500)->Arg(2500)->Unit(benchmark::kMillisecond);

}  // namespace
