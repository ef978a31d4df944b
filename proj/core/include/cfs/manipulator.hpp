#pragma once

#include <array>

#include "cfs/geometry.hpp"

namespace cfs {

inline constexpr int kLegCount = 6;

// Geometry of a semi-regular 6-6 Stewart-Gough platform. Angles in radians.
struct ArchitectureParams {
  double r_f = 0.0;      // fixed-platform circum-radius
  double r_m = 0.0;      // moving-platform circum-radius
  double gamma_f = 0.0;  // half-angle between b1 and b2
  double gamma_m = 0.0;  // half-angle between t1 and t2
  double r_c = 0.0;      // leg capsule radius
  double z0 = 0.0;       // neutral height

  /// Throws std::invalid_argument naming the first violated field.
  void validate() const;

  Vec3 neutral_point() const { return Vec3(0.0, 0.0, z0); }
};

/// Moving-platform centroid `p` (fixed frame) and orientation as Rodrigues parameters `c`.
struct Pose {
  Vec3 p = Vec3::Zero();
  Vec3 c = Vec3::Zero();
};

struct PlatformVertices {
  std::array<Vec3, kLegCount> b;  // fixed platform, fixed frame
  std::array<Vec3, kLegCount> t;  // moving platform, moving frame
};

/// Vertex angles {-g, g, 2pi/3 - g, 2pi/3 + g, 4pi/3 - g, 4pi/3 + g}, CCW from +X.
std::array<double, kLegCount> vertex_angles(double gamma);

PlatformVertices platform_vertices(const ArchitectureParams& arch);

/// Leg i runs from b_i to a_i = p + R t_i (index 0 here is leg L1).
std::array<Capsule, kLegCount> leg_capsules(const ArchitectureParams& arch, const Pose& pose);

/// Same as above with vertices and rotation already computed; used in hot loops
/// where only the position changes.
std::array<Capsule, kLegCount> leg_capsules(const PlatformVertices& verts, const RotationMatrix& rot,
                                            const Vec3& p, double r_c);

std::array<double, kLegCount> leg_lengths(const ArchitectureParams& arch, const Pose& pose);

/// The reference architecture used throughout the examples and tests:
/// r_f = 150, r_m = 75, gamma_f = 30.5 deg, gamma_m = 40.5 deg, r_c = 8.5, z0 = 300.
ArchitectureParams reference_architecture();

double deg_to_rad(double deg);

}  // namespace cfs
