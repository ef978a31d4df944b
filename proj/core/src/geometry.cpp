#include "cfs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cfs {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

Eigen::Matrix3d skew(const Vec3& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
       -v.y(), v.x(), 0.0;
  return m;
}

}  // namespace

bool is_finite(const Vec3& v) {
  return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}

RotationMatrix rodrigues_to_rotation(const Vec3& c) {
  if (!is_finite(c)) {
    throw std::invalid_argument("rodrigues_to_rotation: non-finite Rodrigues parameters");
  }
  const double cc = c.squaredNorm();
  RotationMatrix r = (1.0 - cc) * RotationMatrix::Identity() + 2.0 * c * c.transpose() + 2.0 * skew(c);
  return r / (1.0 + cc);
}

Vec3 rotation_to_rodrigues(const RotationMatrix& r, double eps) {
  // 1 + trace(R) = 4 / (1 + |c|^2) and R - R^T = 4 [c]x / (1 + |c|^2).
  const double denom = 1.0 + r.trace();
  if (!(denom > eps)) {
    throw std::domain_error("rotation_to_rodrigues: rotation angle too close to pi");
  }
  return Vec3(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)) / denom;
}

SegmentDistance segment_segment_distance(const Segment& s1, const Segment& s2) {
  const Vec3 d1 = s1.direction();
  const Vec3 d2 = s2.direction();
  const Vec3 r = s1.a - s2.a;
  const double a = d1.squaredNorm();
  const double e = d2.squaredNorm();
  const double f = d2.dot(r);

  double u = 0.0;
  double v = 0.0;

  if (a <= 0.0 && e <= 0.0) {
    // Both degenerate to points.
  } else if (a <= 0.0) {
    v = clamp01(f / e);
  } else {
    const double c = d1.dot(r);
    if (e <= 0.0) {
      u = clamp01(-c / a);
    } else {
      const double b = d1.dot(d2);
      const double cross = d1.cross(d2).norm();
      // Parallel lines: any u works for the unclamped problem; start from u = 0
      // and let the clamping below pick the closest pair.
      if (cross >= kParallelEpsilon * std::sqrt(a * e)) {
        // |d1 x d2|^2 equals a*e - b*b without the cancellation.
        u = clamp01((b * f - c * e) / (cross * cross));
      }
      v = (b * u + f) / e;
      if (v < 0.0) {
        v = 0.0;
        u = clamp01(-c / a);
      } else if (v > 1.0) {
        v = 1.0;
        u = clamp01((b - c) / a);
      }
    }
  }

  SegmentDistance out;
  out.u = u;
  out.v = v;
  out.on_first = s1.a + u * d1;
  out.on_second = s2.a + v * d2;
  out.distance = (out.on_first - out.on_second).norm();
  return out;
}

double line_line_distance(const Segment& s1, const Segment& s2) {
  const Vec3 d1 = s1.direction();
  const Vec3 d2 = s2.direction();
  const double n1 = d1.norm();
  const double n2 = d2.norm();
  if (n1 <= 0.0 || n2 <= 0.0) {
    throw std::invalid_argument("line_line_distance: zero-length segment");
  }
  const Vec3 w = s2.a - s1.a;
  const Vec3 n = d1.cross(d2);
  const double cross = n.norm();
  if (cross < kParallelEpsilon * n1 * n2) {
    return w.cross(d1).norm() / n1;
  }
  return std::abs(n.dot(w)) / cross;
}

double capsule_clearance(const Capsule& c1, const Capsule& c2) {
  return segment_segment_distance(c1.axis, c2.axis).distance - (c1.radius + c2.radius);
}

}  // namespace cfs
