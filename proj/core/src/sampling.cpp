#include "cfs/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cfs {

ShellSpec ShellSpec::around(const Vec3& center, double r3, double delta, double delta_r) {
  ShellSpec spec;
  spec.center = center;
  spec.r_inner = r3 * (1.0 - delta);
  spec.r_outer = r3 * (1.0 + delta);
  spec.delta_r = delta_r;
  return spec;
}

void ShellSpec::validate() const {
  if (!is_finite(center)) {
    throw std::invalid_argument("ShellSpec.center: non-finite");
  }
  if (!(r_inner > 0.0) || !(r_outer > r_inner) || !std::isfinite(r_outer)) {
    throw std::invalid_argument("ShellSpec: require 0 < r_inner < r_outer");
  }
  if (!(delta_r > 0.0) || !std::isfinite(delta_r)) {
    throw std::invalid_argument("ShellSpec.delta_r: must be > 0");
  }
}

std::vector<double> shell_radii(const ShellSpec& spec) {
  spec.validate();
  const auto count = std::max<long>(1, std::lround((spec.r_outer - spec.r_inner) / spec.delta_r));
  std::vector<double> radii;
  radii.reserve(static_cast<std::size_t>(count));
  for (long m = 0; m < count; ++m) {
    radii.push_back(spec.r_inner + static_cast<double>(m) * spec.delta_r);
  }
  return radii;
}

std::vector<Vec3> usrp_points(std::size_t n_target) {
  if (n_target == 0) {
    throw std::invalid_argument("usrp_points: n_target must be >= 1");
  }
  constexpr double pi = std::numbers::pi;
  const double area = 4.0 * pi / static_cast<double>(n_target);
  const long rings = std::max<long>(1, std::lround(pi / std::sqrt(area)));
  const double d_theta = pi / static_cast<double>(rings);
  const double d_phi = area / d_theta;

  std::vector<Vec3> points;
  points.reserve(n_target + n_target / 10);
  for (long m = 0; m < rings; ++m) {
    const double theta = pi * (static_cast<double>(m) + 0.5) / static_cast<double>(rings);
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    const long per_ring = std::lround(2.0 * pi * st / d_phi);
    for (long n = 0; n < per_ring; ++n) {
      const double phi = 2.0 * pi * static_cast<double>(n) / static_cast<double>(per_ring);
      points.emplace_back(st * std::cos(phi), st * std::sin(phi), ct);
    }
  }
  return points;
}

SampleSet shell_samples(const ShellSpec& spec, std::size_t n_s) {
  SampleSet set;
  set.radii = shell_radii(spec);
  const auto dirs = usrp_points(n_s);
  set.points.reserve(set.radii.size() * dirs.size());
  set.radius_index.reserve(set.radii.size() * dirs.size());
  for (std::size_t k = 0; k < set.radii.size(); ++k) {
    for (const auto& u : dirs) {
      set.points.push_back(spec.center + set.radii[k] * u);
      set.radius_index.push_back(k);
    }
  }
  return set;
}

}  // namespace cfs
