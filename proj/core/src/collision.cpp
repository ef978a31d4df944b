#include "cfs/collision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cfs {

LegPair leg_pair(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > kLegCount || a == b) {
    throw std::invalid_argument("leg pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                ") must satisfy 1 <= i < j <= 6");
  }
  return {a, b};
}

PairFilter::PairFilter(std::vector<LegPair> pairs) : pairs_(std::move(pairs)) {
  for (auto& p : pairs_) p = leg_pair(p.i, p.j);
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

PairFilter PairFilter::all() {
  std::vector<LegPair> pairs;
  for (int i = 1; i <= kLegCount; ++i) {
    for (int j = i + 1; j <= kLegCount; ++j) pairs.push_back({i, j});
  }
  return PairFilter(std::move(pairs));
}

bool PairFilter::contains(LegPair p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

CollisionRecord pair_collision(const Capsule& cap_i, const Capsule& cap_j, LegPair label) {
  const auto sd = segment_segment_distance(cap_i.axis, cap_j.axis);
  CollisionRecord rec;
  rec.pair = label;
  rec.clearance = sd.distance - (cap_i.radius + cap_j.radius);
  rec.colliding = rec.clearance < 0.0;
  rec.witness_i = sd.on_first;
  rec.witness_j = sd.on_second;
  return rec;
}

PoseClearance pose_min_clearance(const std::array<Capsule, kLegCount>& legs, const PairFilter& filter) {
  if (filter.empty()) {
    throw std::invalid_argument("pose_min_clearance: empty pair filter");
  }
  PoseClearance out;
  out.records.reserve(filter.size());
  for (const auto& p : filter.pairs()) {
    out.records.push_back(pair_collision(legs[p.i - 1], legs[p.j - 1], p));
  }
  // Filter is sorted, so the first strict minimum is the lexicographically smallest tie.
  const auto& worst = *std::min_element(out.records.begin(), out.records.end(),
                                        [](const auto& a, const auto& b) { return a.clearance < b.clearance; });
  out.min_clearance = worst.clearance;
  out.worst_pair = worst.pair;
  return out;
}

PoseClearance pose_min_clearance(const ArchitectureParams& arch, const Pose& pose, const PairFilter& filter) {
  if (filter.empty()) {
    throw std::invalid_argument("pose_min_clearance: empty pair filter");
  }
  return pose_min_clearance(leg_capsules(arch, pose), filter);
}

MinClearance min_clearance(const std::array<Capsule, kLegCount>& legs, const PairFilter& filter) {
  if (filter.empty()) {
    throw std::invalid_argument("min_clearance: empty pair filter");
  }
  MinClearance best{std::numeric_limits<double>::infinity(), filter.pairs().front()};
  for (const auto& p : filter.pairs()) {
    const double c = capsule_clearance(legs[p.i - 1], legs[p.j - 1]);
    if (c < best.clearance) best = {c, p};
  }
  return best;
}

// ---------------------------------------------------------------------------
// Interference oracle

namespace {

// A capsule seen as its three primitives: the finite cylinder and the two end balls.
struct Decomposed {
  Vec3 a;
  Vec3 b;
  Vec3 axis;        // b - a
  double len_sq;
  double radius;

  explicit Decomposed(const Capsule& c)
      : a(c.axis.a), b(c.axis.b), axis(c.axis.b - c.axis.a), len_sq(axis.squaredNorm()), radius(c.radius) {}

  // Squared distance from x to the nearest primitive's core (ball centre or cylinder axis).
  double core_distance_sq(const Vec3& x) const {
    double best = std::min((x - a).squaredNorm(), (x - b).squaredNorm());
    if (len_sq > 0.0) {
      const double t = (x - a).dot(axis) / len_sq;
      if (t >= 0.0 && t <= 1.0) {
        best = std::min(best, (x - (a + t * axis)).squaredNorm());
      }
    }
    return best;
  }

  bool strictly_contains(const Vec3& x) const { return core_distance_sq(x) < radius * radius; }

  // No point within `reach` of x can be strictly inside.
  bool out_of_reach(const Vec3& x, double reach) const {
    const double r = radius + reach;
    return core_distance_sq(x) >= r * r;
  }
};

int steps_for(double length, double resolution) {
  return std::max(1, static_cast<int>(std::ceil(length / resolution)));
}

// Unit vectors spanning the plane orthogonal to w.
void orthonormal_frame(const Vec3& w, Vec3& e1, Vec3& e2) {
  const Vec3 helper = std::abs(w.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  e1 = w.cross(helper).normalized();
  e2 = w.cross(e1);
}

bool ball_hits(const Vec3& centre, double radius, const Decomposed& other, double resolution) {
  constexpr double pi = std::numbers::pi;
  if (other.out_of_reach(centre, radius)) return false;
  if (other.strictly_contains(centre)) return true;
  const int n_rad = steps_for(radius, resolution);
  for (int l = 1; l <= n_rad; ++l) {
    const double rho = radius * l / n_rad;
    const int n_pol = steps_for(pi * rho, resolution);
    for (int q = 0; q <= n_pol; ++q) {
      const double psi = pi * q / n_pol;
      const double ring = rho * std::sin(psi);
      const double z = rho * std::cos(psi);
      const int n_az = ring > 0.0 ? steps_for(2.0 * pi * ring, resolution) : 1;
      for (int k = 0; k < n_az; ++k) {
        const double phi = 2.0 * pi * k / n_az;
        const Vec3 x = centre + Vec3(ring * std::cos(phi), ring * std::sin(phi), z);
        if (other.strictly_contains(x)) return true;
      }
    }
  }
  return false;
}

bool cylinder_hits(const Decomposed& self, const Decomposed& other, double resolution) {
  constexpr double pi = std::numbers::pi;
  const double length = std::sqrt(self.len_sq);
  const Vec3 w = self.axis / length;
  Vec3 e1, e2;
  orthonormal_frame(w, e1, e2);

  const int n_ax = steps_for(length, resolution);
  const int n_rad = steps_for(self.radius, resolution);
  for (int s = 0; s <= n_ax; ++s) {
    const Vec3 centre = self.a + (static_cast<double>(s) / n_ax) * self.axis;
    if (other.out_of_reach(centre, self.radius)) continue;
    if (other.strictly_contains(centre)) return true;
    for (int l = 1; l <= n_rad; ++l) {
      const double rho = self.radius * l / n_rad;
      const int n_az = steps_for(2.0 * pi * rho, resolution);
      for (int k = 0; k < n_az; ++k) {
        const double phi = 2.0 * pi * k / n_az;
        const Vec3 x = centre + rho * (std::cos(phi) * e1 + std::sin(phi) * e2);
        if (other.strictly_contains(x)) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool capsule_overlap_oracle(const Capsule& cap_i, const Capsule& cap_j, double resolution) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw std::invalid_argument("capsule_overlap_oracle: resolution must be > 0");
  }
  if (!(cap_i.radius > 0.0) || !(cap_j.radius > 0.0)) {
    throw std::invalid_argument("capsule_overlap_oracle: capsule radius must be > 0");
  }
  const Decomposed self(cap_i);
  const Decomposed other(cap_j);
  if (ball_hits(self.a, self.radius, other, resolution)) return true;
  if (ball_hits(self.b, self.radius, other, resolution)) return true;
  return self.len_sq > 0.0 && cylinder_hits(self, other, resolution);
}

}  // namespace cfs
