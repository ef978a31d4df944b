#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace cfs {

// Lengths are millimetres throughout; angles are radians.
using Vec3 = Eigen::Vector3d;
using RotationMatrix = Eigen::Matrix3d;

struct Segment {
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();

  Vec3 direction() const { return b - a; }
  Vec3 at(double u) const { return a + u * (b - a); }
};

// A sphere of `radius` swept along `axis`: finite cylinder plus two terminal spheres.
struct Capsule {
  Segment axis;
  double radius = 0.0;
};

struct SegmentDistance {
  double distance = 0.0;
  // Closest points on the first and second segment, with their parameters in [0, 1].
  Vec3 on_first = Vec3::Zero();
  Vec3 on_second = Vec3::Zero();
  double u = 0.0;
  double v = 0.0;
};

/// Rotation matrix from Rodrigues parameters c = tan(theta/2) * axis,
/// R = [(1 - c.c) I + 2 c c^T + 2 [c]x] / (1 + c.c).
/// Throws std::invalid_argument on non-finite input.
RotationMatrix rodrigues_to_rotation(const Vec3& c);

/// Inverse Cayley map. Only defined when 1 + trace(R) is bounded away from zero
/// (rotation angle below pi); throws std::domain_error otherwise.
Vec3 rotation_to_rodrigues(const RotationMatrix& r, double eps = 1e-12);

/// Clamped closest-point distance between two finite segments. Handles parallel,
/// collinear and zero-length (point) segments.
SegmentDistance segment_segment_distance(const Segment& s1, const Segment& s2);

/// Distance between the infinite lines carrying s1 and s2.
/// Throws std::invalid_argument if either segment has zero length.
double line_line_distance(const Segment& s1, const Segment& s2);

/// Signed separation: axis distance minus the sum of the radii. Negative means the
/// solids interpenetrate, zero means tangency.
double capsule_clearance(const Capsule& c1, const Capsule& c2);

bool is_finite(const Vec3& v);

// |d1 x d2| below this fraction of |d1||d2| is treated as parallel.
inline constexpr double kParallelEpsilon = 1e-12;

}  // namespace cfs
