#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cfs/collision.hpp"
#include "cfs/geometry.hpp"
#include "cfs/manipulator.hpp"

namespace {

std::vector<cfs::Segment> random_segments(std::size_t n) {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> d(-250.0, 250.0);
  std::vector<cfs::Segment> out(n);
  for (auto& s : out) {
    s.a = cfs::Vec3(d(gen), d(gen), d(gen));
    s.b = cfs::Vec3(d(gen), d(gen), d(gen));
  }
  return out;
}

void BM_SegmentSegmentDistance(benchmark::State& state) {
  const auto segs = random_segments(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cfs::segment_segment_distance(segs[i & 1023], segs[(i + 1) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_SegmentSegmentDistance);

void BM_RodriguesToRotation(benchmark::State& state) {
  const cfs::Vec3 c(0.2534, 0.6740, 0.2653);
  for (auto _ : state) benchmark::DoNotOptimize(cfs::rodrigues_to_rotation(c));
}
BENCHMARK(BM_RodriguesToRotation);

void BM_PoseMinClearanceAllPairs(benchmark::State& state) {
  const auto arch = cfs::reference_architecture();
  const auto verts = cfs::platform_vertices(arch);
  const auto rot = cfs::rodrigues_to_rotation(cfs::Vec3(0.2534, 0.6740, 0.2653));
  const auto filter = cfs::PairFilter::all();
  for (auto _ : state) {
    const auto legs = cfs::leg_capsules(verts, rot, arch.neutral_point(), arch.r_c);
    benchmark::DoNotOptimize(cfs::min_clearance(legs, filter));
  }
}
BENCHMARK(BM_PoseMinClearanceAllPairs);

void BM_OverlapOracle(benchmark::State& state) {
  const cfs::Capsule a{{{0, 0, 0}, {0, 0, 300}}, 8.5};
  const cfs::Capsule b{{{30, -100, 0}, {20, 100, 300}}, 8.5};
  const double res = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(cfs::capsule_overlap_oracle(a, b, res));
}
BENCHMARK(BM_OverlapOracle)->Arg(5)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace
