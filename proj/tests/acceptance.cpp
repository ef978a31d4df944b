// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cfs/collision.hpp"
#include "cfs/geometry.hpp"
#include "cfs/sampling.hpp"
#include "cfs/validation.hpp"
#include "cfs_tool/cli.hpp"
#include "test_support.hpp"

using namespace cfs;
using cfs::testing::Rng;

namespace {

namespace fs = std::filesystem;

const Vec3 kScenario1C(-0.2301, 0.0413, 3.0209);
const Vec3 kScenario2C(0.2534, 0.6740, 0.2653);

struct Outcome {
  bool pass;
  std::string detail;
};

int g_failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++g_failures;
  std::printf("[%s] %d. %s -- %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

ValidationConfig scenario1() {
  ValidationConfig cfg;
  cfg.arch = reference_architecture();
  cfg.orientation = kScenario1C;
  cfg.r3 = 188.4;
  cfg.delta = 0.1;
  cfg.delta_r = 10.0;
  cfg.n_s = 2500;
  cfg.pairs = PairFilter({{1, 2}});
  return cfg;
}

ValidationConfig scenario2() {
  ValidationConfig cfg;
  cfg.arch = reference_architecture();
  cfg.orientation = kScenario2C;
  cfg.r3 = 13.5;
  cfg.delta = 0.1;
  cfg.delta_r = 1.0;
  cfg.n_s = 2500;
  cfg.pairs = PairFilter::all();
  return cfg;
}

Outcome scenario_check(const ValidationConfig& cfg, std::size_t expected_unsafe, std::size_t tolerance,
                       double max_seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto report = validate_cfs(cfg, RunOptions{1});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double min_unsafe_r = INFINITY;
  for (const auto& s : report.unsafe) min_unsafe_r = std::min(min_unsafe_r, s.radius);
  const std::size_t n = report.unsafe.size();
  const bool count_ok = n + tolerance >= expected_unsafe && n <= expected_unsafe + tolerance && n > 0;
  const bool outside_ok = min_unsafe_r > cfg.r3;
  const bool ok = report.verdict == Verdict::validated && report.unsafe_inside_cfs.empty() && count_ok &&
                  outside_ok && secs < max_seconds;
  return {ok, fmt("N=%zu verdict=%s unsafe=%zu (expect %zu+-%zu) inside=%zu min unsafe radius=%.4f > r3=%.1f, %.3f s < %.0f s",
                  report.total_samples, std::string(to_string(report.verdict)).c_str(), n, expected_unsafe,
                  tolerance, report.unsafe_inside_cfs.size(), min_unsafe_r, cfg.r3, secs, max_seconds)};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

int main() {
  criterion(1, "Scenario-1 reproduction", [] { return scenario_check(scenario1(), 81, 40, 10.0); });
  criterion(2, "Scenario-2 reproduction", [] { return scenario_check(scenario2(), 38, 20, 60.0); });

  criterion(3, "Distance-kernel oracle equivalence", [] {
    Rng rng(2024);
    int bad_grid = 0;
    int bad_line = 0;
    double worst_slack = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const Segment s1 = rng.segment_in_cube(250.0);
      const Segment s2 = rng.segment_in_cube(250.0);
      const double d = segment_segment_distance(s1, s2).distance;
      const auto oracle = cfs::testing::segment_grid_oracle(s1, s2, 2001);
      // Kernel must be no larger than any grid value and within the Lipschitz bound below it.
      if (d > oracle.minimum + 1e-9 || d < oracle.minimum - oracle.error_bound - 1e-9) ++bad_grid;
      worst_slack = std::max(worst_slack, (oracle.minimum - d) / oracle.error_bound);
      if (line_line_distance(s1, s2) > d + 1e-9) ++bad_line;
    }
    return Outcome{bad_grid == 0 && bad_line == 0,
                   fmt("1000 pairs: grid mismatches=%d, line>segment violations=%d, max (grid-kernel)/bound=%.3f",
                       bad_grid, bad_line, worst_slack)};
  });

  criterion(4, "Interference-oracle agreement", [] {
    Rng rng(4242);
    int checked = 0;
    int colliding = 0;
    int disagreements = 0;
    while (checked < 1000) {
      const Segment s1 = rng.segment_in_cube(250.0);
      // Anchor the second capsule near a random point of the first so both outcomes occur.
      const Vec3 anchor = s1.at(rng.uniform(0.0, 1.0)) + rng.in_ball(40.0);
      const Vec3 dir = rng.unit() * rng.uniform(0.0, 150.0);
      const Capsule a{s1, rng.uniform(2.0, 15.0)};
      const Capsule b{{anchor - dir * rng.uniform(0.0, 1.0), anchor + dir}, rng.uniform(2.0, 15.0)};
      const auto rec = pair_collision(a, b);
      if (std::abs(rec.clearance) <= 1.0) continue;
      ++checked;
      colliding += rec.colliding;
      if (capsule_overlap_oracle(a, b, 0.5) != rec.colliding) ++disagreements;
    }
    return Outcome{disagreements == 0 && colliding > 0 && colliding < checked,
                   fmt("%d pairs (%d colliding), resolution 0.5 mm: disagreements=%d", checked, colliding,
                       disagreements)};
  });

  criterion(5, "Rotation invariants", [] {
    Rng rng(555);
    double worst_orth = 0.0;
    double worst_det = 0.0;
    double worst_trip = 0.0;
    for (int k = 0; k < 10000; ++k) {
      const Vec3 c = rng.in_ball(10.0);
      const RotationMatrix r = rodrigues_to_rotation(c);
      worst_orth = std::max(worst_orth, (r.transpose() * r - RotationMatrix::Identity()).cwiseAbs().maxCoeff());
      worst_det = std::max(worst_det, std::abs(r.determinant() - 1.0));
      worst_trip = std::max(worst_trip, (rotation_to_rodrigues(r) - c).norm());
    }
    return Outcome{worst_orth <= 1e-9 && worst_det <= 1e-9 && worst_trip <= 1e-9,
                   fmt("10^4 samples |c|<=10: max|R^T R - I|=%.2e, max|det-1|=%.2e, max round trip=%.2e (bound 1e-9)",
                       worst_orth, worst_det, worst_trip)};
  });

  criterion(6, "Sampling determinism and structure", [] {
    const Vec3 p0(0, 0, 300);
    const auto r1 = shell_radii({p0, 169.6, 207.2, 10.0});
    const auto r2 = shell_radii({p0, 12.2, 14.9, 1.0});
    const std::vector<double> e1{169.6, 179.6, 189.6, 199.6};
    const std::vector<double> e2{12.2, 13.2, 14.2};
    auto close = [](const std::vector<double>& a, const std::vector<double>& b) {
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > 1e-9) return false;
      }
      return true;
    };
    const bool radii_ok = close(r1, e1) && close(r2, e2);

    const std::size_t usrp = usrp_points(2500).size();
    const bool count_ok = usrp >= 2450 && usrp <= 2550;

    const auto a = validate_cfs(scenario2(), {1});
    const auto b = validate_cfs(scenario2(), {1});
    bool repeat_ok = a.samples.size() == b.samples.size();
    for (std::size_t i = 0; repeat_ok && i < a.samples.size(); ++i) {
      for (int k = 0; k < 3; ++k) {
        repeat_ok &= std::bit_cast<std::uint64_t>(a.samples[i].position[k]) ==
                     std::bit_cast<std::uint64_t>(b.samples[i].position[k]);
      }
      repeat_ok &= std::bit_cast<std::uint64_t>(a.samples[i].min_clearance) ==
                   std::bit_cast<std::uint64_t>(b.samples[i].min_clearance);
    }

    // CLI outputs under different --threads settings.
    const fs::path root = fs::temp_directory_path() / "cfs_acceptance_threads";
    fs::remove_all(root);
    bool threads_ok = true;
    std::ostringstream sink;
    const std::string cfg = std::string(CFS_CONFIG_DIR) + "/scenario2.json";
    std::vector<std::string> dirs;
    for (const char* t : {"1", "4", "0"}) {
      const std::string dir = (root / t).string();
      dirs.push_back(dir);
      threads_ok &= cfs::tool::run_cli({"validate", "--config", cfg, "--output-dir", dir, "--threads", t}, sink, sink) == 0;
    }
    for (const char* name : {"summary.json", "samples.csv", "unsafe.csv"}) {
      const std::string ref = slurp(fs::path(dirs[0]) / name);
      threads_ok &= !ref.empty();
      for (std::size_t d = 1; d < dirs.size(); ++d) threads_ok &= slurp(fs::path(dirs[d]) / name) == ref;
    }
    fs::remove_all(root);

    return Outcome{radii_ok && count_ok && repeat_ok && threads_ok,
                   fmt("radii %s, USRP(2500)=%zu, repeat bit-identical=%s, --threads 1/4/0 byte-identical=%s",
                       radii_ok ? "match" : "MISMATCH", usrp, repeat_ok ? "yes" : "no", threads_ok ? "yes" : "no")};
  });

  criterion(7, "Estimation bracket", [] {
    const auto arch = reference_architecture();
    const double r_max = 50.0;

    // Dense radius-sweep oracle: 10^4 directions, 0.05 mm steps, first colliding radius.
    const auto verts = platform_vertices(arch);
    const auto rot = rodrigues_to_rotation(kScenario2C);
    const auto filter = PairFilter::all();
    double bound = INFINITY;
    for (const Vec3& u : usrp_points(10000)) {
      for (int k = 0; k * 0.05 <= r_max; ++k) {
        const double r = k * 0.05;
        if (r >= bound) break;
        if (min_clearance(leg_capsules(verts, rot, arch.neutral_point() + r * u, arch.r_c), filter).clearance < 0.0) {
          bound = r;
          break;
        }
      }
    }

    EstimateParams params;
    params.n_directions = 2500;
    params.r_max = r_max;
    params.tol = 0.01;
    const auto est = estimate_cfs(arch, kScenario2C, params);

    auto cfg = scenario2();
    cfg.r3 = est.r3;
    cfg.n_s = params.n_directions;
    const auto report = validate_cfs(cfg);

    const bool ok = !est.censored && est.r3 >= 0.95 * 13.5 && est.r3 <= bound && report.verdict == Verdict::validated;
    return Outcome{ok, fmt("B=%.2f mm (sweep oracle), r3_est=%.4f mm in [%.3f, B], censored=%s, revalidation at r3_est: %s "
                           "(unsafe=%zu, inside=%zu)",
                           bound, est.r3, 0.95 * 13.5, est.censored ? "yes" : "no",
                           std::string(to_string(report.verdict)).c_str(), report.unsafe.size(),
                           report.unsafe_inside_cfs.size())};
  });

  criterion(8, "Monotonicity in capsule radius", [] {
    auto base = scenario2();
    auto thick = scenario2();
    thick.arch.r_c = 10.0;
    const auto a = validate_cfs(base);
    const auto b = validate_cfs(thick);
    std::set<std::size_t> thick_unsafe;
    for (const auto& s : b.unsafe) thick_unsafe.insert(s.index);
    std::size_t lost = 0;
    for (const auto& s : a.unsafe) lost += !thick_unsafe.contains(s.index);
    return Outcome{lost == 0 && b.unsafe.size() >= a.unsafe.size(),
                   fmt("r_c 8.5 -> 10: unsafe %zu -> %zu, previously unsafe turned safe=%zu", a.unsafe.size(),
                       b.unsafe.size(), lost)};
  });

  std::printf("%s: %d criterion(s) failed\n", g_failures ? "FAILED" : "ALL PASSED", g_failures);
  return g_failures == 0 ? 0 : 1;
}
