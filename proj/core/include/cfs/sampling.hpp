#pragma once

#include <cstddef>
#include <vector>

#include "cfs/geometry.hpp"

namespace cfs {

// Spherical annulus r_inner <= |x - center| <= r_outer, swept at radial step delta_r.
struct ShellSpec {
  Vec3 center = Vec3::Zero();
  double r_inner = 0.0;
  double r_outer = 0.0;
  double delta_r = 0.0;

  /// Shell [r3 (1 - delta), r3 (1 + delta)] around `center`.
  static ShellSpec around(const Vec3& center, double r3, double delta, double delta_r);

  void validate() const;
};

struct SampleSet {
  std::vector<Vec3> points;
  std::vector<double> radii;               // the radius grid
  std::vector<std::size_t> radius_index;   // per point, index into `radii`

  std::size_t size() const { return points.size(); }
  double radius_of(std::size_t i) const { return radii[radius_index[i]]; }
};

/// r_inner + m * delta_r for m = 0 .. N_r - 1, N_r = max(1, round((r_outer - r_inner) / delta_r)).
std::vector<double> shell_radii(const ShellSpec& spec);

/// Near-equal-area placement of roughly `n_target` unit vectors on latitude rings:
/// area per point a = 4 pi / n, M_theta = round(pi / sqrt(a)) rings at colatitude
/// pi (m + 1/2) / M_theta, each with round(2 pi sin(theta) / (a / (pi / M_theta)))
/// equally spaced azimuths starting at 0. Ordered ring-major (north to south), then azimuth.
std::vector<Vec3> usrp_points(std::size_t n_target);

/// Every USRP direction at every grid radius, radius-major.
SampleSet shell_samples(const ShellSpec& spec, std::size_t n_s);

}  // namespace cfs
