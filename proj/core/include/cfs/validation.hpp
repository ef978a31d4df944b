#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cfs/collision.hpp"
#include "cfs/manipulator.hpp"
#include "cfs/sampling.hpp"

namespace cfs {

// Samples at radius <= r3 + kInsideTolerance count as inside the collision-free sphere.
inline constexpr double kInsideTolerance = 1e-9;

struct ValidationConfig {
  ArchitectureParams arch;
  Vec3 orientation = Vec3::Zero();  // Rodrigues parameters of the moving platform
  double r3 = 0.0;                  // radius under test, mm
  double delta = 0.1;               // shell half-width as a fraction of r3
  double delta_r = 0.0;             // radial resolution, mm
  std::size_t n_s = 0;              // target directions per sphere
  PairFilter pairs = PairFilter::all();
  // Literal shell radii; when unset they derive from r3 (1 -/+ delta).
  std::optional<double> r_inner;
  std::optional<double> r_outer;

  void validate() const;
  ShellSpec shell() const;
};

struct SampleResult {
  std::size_t index = 0;
  Vec3 position = Vec3::Zero();
  double radius = 0.0;  // grid radius, i.e. distance from the neutral point
  double min_clearance = 0.0;
  LegPair worst_pair;
  bool safe = true;  // min_clearance >= 0
};

enum class Verdict { validated, violated };

std::string_view to_string(Verdict v);

struct ValidationReport {
  ValidationConfig config;
  ShellSpec shell;
  std::vector<double> radii;
  std::size_t directions_per_sphere = 0;
  std::size_t total_samples = 0;
  std::vector<SampleResult> samples;  // every sample, in generation order
  std::vector<SampleResult> unsafe;
  std::vector<SampleResult> unsafe_inside_cfs;
  Verdict verdict = Verdict::validated;
  double seconds = 0.0;  // wall time; never serialised
};

struct RunOptions {
  unsigned threads = 1;  // 0 = hardware concurrency
};

/// Samples the shell around the sphere of radius r3 centred at the neutral point and checks
/// every filtered leg pair at each sample. The verdict is `validated` iff no unsafe sample
/// lies at radius <= r3. Results do not depend on the thread count.
ValidationReport validate_cfs(const ValidationConfig& config, RunOptions options = {});

struct EstimateParams {
  std::size_t n_directions = 2500;
  double r_max = 0.0;
  double tol = 0.01;
  PairFilter pairs = PairFilter::all();

  void validate() const;
};

struct CfsEstimate {
  double r3 = 0.0;                       // smallest colliding radius found, or r_max if censored
  Vec3 limiting_direction = Vec3::UnitZ();
  bool censored = false;                 // no direction collides within r_max
  std::size_t directions = 0;
};

/// Estimates the collision-free radius by searching each USRP direction outward from the
/// neutral point: a march at step 10 tol brackets the first collision, which is then bisected
/// down to tol. Clearance along a ray is not assumed monotone.
CfsEstimate estimate_cfs(const ArchitectureParams& arch, const Vec3& orientation,
                         const EstimateParams& params, RunOptions options = {});

/// Same search over an explicit direction set (unit vectors).
CfsEstimate estimate_cfs_along(const ArchitectureParams& arch, const Vec3& orientation,
                               std::span<const Vec3> directions, const EstimateParams& params,
                               RunOptions options = {});

/// First colliding radius along one ray, or nullopt if none within r_max.
std::optional<double> first_collision_radius(const ArchitectureParams& arch, const Vec3& orientation,
                                             const Vec3& direction, const EstimateParams& params);

}  // namespace cfs
