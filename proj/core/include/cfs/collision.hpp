#pragma once

#include <array>
#include <compare>
#include <span>
#include <vector>

#include "cfs/geometry.hpp"
#include "cfs/manipulator.hpp"

namespace cfs {

/// Unordered leg pair, 1-based, stored with i < j.
struct LegPair {
  int i = 1;
  int j = 2;

  auto operator<=>(const LegPair&) const = default;
};

/// Normalises to i < j and checks 1 <= i < j <= 6.
LegPair leg_pair(int a, int b);

/// Sorted, duplicate-free set of leg pairs.
class PairFilter {
 public:
  PairFilter() = default;
  explicit PairFilter(std::vector<LegPair> pairs);

  static PairFilter all();

  std::span<const LegPair> pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }
  bool contains(LegPair p) const;
  bool is_all() const { return pairs_.size() == 15; }

 private:
  std::vector<LegPair> pairs_;
};

struct CollisionRecord {
  LegPair pair;
  double clearance = 0.0;
  bool colliding = false;  // clearance < 0; tangency is not a collision
  Vec3 witness_i = Vec3::Zero();
  Vec3 witness_j = Vec3::Zero();
};

struct PoseClearance {
  double min_clearance = 0.0;
  LegPair worst_pair;
  std::vector<CollisionRecord> records;  // in filter order

  bool colliding() const { return min_clearance < 0.0; }
};

/// Pair labels default to (1, 2); the caller passes the real legs.
CollisionRecord pair_collision(const Capsule& cap_i, const Capsule& cap_j, LegPair label = {});

/// Evaluates every filtered pair on leg_capsules(arch, pose). Ties in the minimum go to the
/// lexicographically smallest pair. Throws std::invalid_argument on an empty filter.
PoseClearance pose_min_clearance(const ArchitectureParams& arch, const Pose& pose,
                                 const PairFilter& filter);

PoseClearance pose_min_clearance(const std::array<Capsule, kLegCount>& legs, const PairFilter& filter);

/// Allocation-free minimum for hot loops: min clearance and the pair attaining it.
struct MinClearance {
  double clearance;
  LegPair pair;
};
MinClearance min_clearance(const std::array<Capsule, kLegCount>& legs, const PairFilter& filter);

inline constexpr double kDefaultOracleResolution = 0.5;

/// Brute-force interference test independent of the segment-distance kernel. The solid of
/// cap_i is decomposed into its cylinder and two terminal balls and sampled on a grid
/// (axial x radial x azimuth; radial x polar x azimuth for the balls) whose steps do not
/// exceed `resolution`. Each sample is tested for strict membership in cap_j, itself
/// decomposed the same way. Never reports an overlap that does not exist; may miss
/// interpenetrations shallower than the grid resolution.
/// Throws std::invalid_argument for non-positive resolution or radii.
bool capsule_overlap_oracle(const Capsule& cap_i, const Capsule& cap_j,
                            double resolution = kDefaultOracleResolution);

}  // namespace cfs
