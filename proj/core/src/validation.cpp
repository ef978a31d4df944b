#include "cfs/validation.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace cfs {

std::string_view to_string(Verdict v) {
  return v == Verdict::validated ? "validated" : "violated";
}

void ValidationConfig::validate() const {
  arch.validate();
  if (!is_finite(orientation)) {
    throw std::invalid_argument("ValidationConfig.orientation: non-finite");
  }
  if (!(r3 > 0.0) || !std::isfinite(r3)) {
    throw std::invalid_argument("ValidationConfig.r3: must be > 0");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("ValidationConfig.delta: must lie in (0, 1)");
  }
  if (!(delta_r > 0.0) || !std::isfinite(delta_r)) {
    throw std::invalid_argument("ValidationConfig.delta_r: must be > 0");
  }
  if (n_s == 0) {
    throw std::invalid_argument("ValidationConfig.n_s: must be >= 1");
  }
  if (pairs.empty()) {
    throw std::invalid_argument("ValidationConfig.pairs: empty pair filter");
  }
  shell().validate();
}

ShellSpec ValidationConfig::shell() const {
  ShellSpec spec = ShellSpec::around(arch.neutral_point(), r3, delta, delta_r);
  if (r_inner) spec.r_inner = *r_inner;
  if (r_outer) spec.r_outer = *r_outer;
  return spec;
}

ValidationReport validate_cfs(const ValidationConfig& config, RunOptions options) {
  const auto start = std::chrono::steady_clock::now();
  config.validate();

  ValidationReport report;
  report.config = config;
  report.shell = config.shell();
  const SampleSet set = shell_samples(report.shell, config.n_s);
  report.radii = set.radii;
  report.directions_per_sphere = set.radii.empty() ? 0 : set.size() / set.radii.size();
  report.total_samples = set.size();

  const PlatformVertices verts = platform_vertices(config.arch);
  const RotationMatrix rot = rodrigues_to_rotation(config.orientation);

  report.samples.resize(set.size());
  detail::parallel_for(set.size(), options.threads, [&](std::size_t i) {
    const auto legs = leg_capsules(verts, rot, set.points[i], config.arch.r_c);
    const auto worst = min_clearance(legs, config.pairs);
    auto& s = report.samples[i];
    s.index = i;
    s.position = set.points[i];
    s.radius = set.radius_of(i);
    s.min_clearance = worst.clearance;
    s.worst_pair = worst.pair;
    s.safe = worst.clearance >= 0.0;
  });

  for (const auto& s : report.samples) {
    if (s.safe) continue;
    report.unsafe.push_back(s);
    if (s.radius <= config.r3 + kInsideTolerance) report.unsafe_inside_cfs.push_back(s);
  }
  report.verdict = report.unsafe_inside_cfs.empty() ? Verdict::validated : Verdict::violated;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void EstimateParams::validate() const {
  if (n_directions == 0) {
    throw std::invalid_argument("EstimateParams.n_directions: must be >= 1");
  }
  if (!(tol > 0.0) || !(r_max > tol) || !std::isfinite(r_max)) {
    throw std::invalid_argument("EstimateParams: require 0 < tol < r_max");
  }
  if (pairs.empty()) {
    throw std::invalid_argument("EstimateParams.pairs: empty pair filter");
  }
}

namespace {

struct RaySearch {
  const PlatformVertices& verts;
  const RotationMatrix& rot;
  Vec3 origin;
  double r_c;
  const EstimateParams& params;

  bool collides(const Vec3& dir, double r) const {
    const auto legs = leg_capsules(verts, rot, origin + r * dir, r_c);
    return min_clearance(legs, params.pairs).clearance < 0.0;
  }

  std::optional<double> first_collision(const Vec3& dir) const {
    if (collides(dir, 0.0)) return 0.0;
    const double step = 10.0 * params.tol;
    double lo = 0.0;
    while (lo < params.r_max) {
      const double hi = std::min(lo + step, params.r_max);
      if (collides(dir, hi)) {
        double a = lo;
        double b = hi;
        while (b - a > params.tol) {
          const double mid = 0.5 * (a + b);
          (collides(dir, mid) ? b : a) = mid;
        }
        return b;
      }
      lo = hi;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<double> first_collision_radius(const ArchitectureParams& arch, const Vec3& orientation,
                                             const Vec3& direction, const EstimateParams& params) {
  params.validate();
  const PlatformVertices verts = platform_vertices(arch);
  const RotationMatrix rot = rodrigues_to_rotation(orientation);
  const RaySearch search{verts, rot, arch.neutral_point(), arch.r_c, params};
  return search.first_collision(direction.normalized());
}

CfsEstimate estimate_cfs_along(const ArchitectureParams& arch, const Vec3& orientation,
                               std::span<const Vec3> directions, const EstimateParams& params,
                               RunOptions options) {
  params.validate();
  if (directions.empty()) {
    throw std::invalid_argument("estimate_cfs: empty direction set");
  }
  const PlatformVertices verts = platform_vertices(arch);
  const RotationMatrix rot = rodrigues_to_rotation(orientation);
  const RaySearch search{verts, rot, arch.neutral_point(), arch.r_c, params};

  std::vector<std::optional<double>> hits(directions.size());
  detail::parallel_for(directions.size(), options.threads,
                       [&](std::size_t i) { hits[i] = search.first_collision(directions[i]); });

  CfsEstimate est;
  est.directions = directions.size();
  est.r3 = params.r_max;
  est.censored = true;
  est.limiting_direction = directions.front();
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] && (est.censored || *hits[i] < est.r3)) {
      est.r3 = *hits[i];
      est.limiting_direction = directions[i];
      est.censored = false;
    }
  }
  return est;
}

CfsEstimate estimate_cfs(const ArchitectureParams& arch, const Vec3& orientation,
                         const EstimateParams& params, RunOptions options) {
  params.validate();
  const auto directions = usrp_points(params.n_directions);
  return estimate_cfs_along(arch, orientation, directions, params, options);
}

}  // namespace cfs
