#include "cfs/manipulator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cfs {

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) {
    throw std::invalid_argument(std::string("ArchitectureParams.") + field + ": " + what);
  }
}

}  // namespace

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

void ArchitectureParams::validate() const {
  constexpr double kMaxGamma = std::numbers::pi / 3.0;
  require(std::isfinite(r_f) && r_f > 0.0, "r_f", "must be > 0");
  require(std::isfinite(r_m) && r_m > 0.0, "r_m", "must be > 0");
  require(std::isfinite(gamma_f) && gamma_f > 0.0 && gamma_f < kMaxGamma, "gamma_f",
          "must lie in (0, pi/3)");
  require(std::isfinite(gamma_m) && gamma_m > 0.0 && gamma_m < kMaxGamma, "gamma_m",
          "must lie in (0, pi/3)");
  require(std::isfinite(r_c) && r_c > 0.0, "r_c", "must be > 0");
  require(std::isfinite(z0) && z0 > 0.0, "z0", "must be > 0");
}

std::array<double, kLegCount> vertex_angles(double gamma) {
  constexpr double third = 2.0 * std::numbers::pi / 3.0;
  return {-gamma, gamma, third - gamma, third + gamma, 2.0 * third - gamma, 2.0 * third + gamma};
}

PlatformVertices platform_vertices(const ArchitectureParams& arch) {
  arch.validate();
  PlatformVertices v;
  const auto fixed = vertex_angles(arch.gamma_f);
  const auto moving = vertex_angles(arch.gamma_m);
  for (int i = 0; i < kLegCount; ++i) {
    v.b[i] = arch.r_f * Vec3(std::cos(fixed[i]), std::sin(fixed[i]), 0.0);
    v.t[i] = arch.r_m * Vec3(std::cos(moving[i]), std::sin(moving[i]), 0.0);
  }
  return v;
}

std::array<Capsule, kLegCount> leg_capsules(const PlatformVertices& verts, const RotationMatrix& rot,
                                            const Vec3& p, double r_c) {
  std::array<Capsule, kLegCount> legs;
  for (int i = 0; i < kLegCount; ++i) {
    legs[i].axis.a = verts.b[i];
    legs[i].axis.b = p + rot * verts.t[i];
    legs[i].radius = r_c;
  }
  return legs;
}

std::array<Capsule, kLegCount> leg_capsules(const ArchitectureParams& arch, const Pose& pose) {
  if (!is_finite(pose.p)) {
    throw std::invalid_argument("Pose.p: non-finite position");
  }
  return leg_capsules(platform_vertices(arch), rodrigues_to_rotation(pose.c), pose.p, arch.r_c);
}

std::array<double, kLegCount> leg_lengths(const ArchitectureParams& arch, const Pose& pose) {
  const auto legs = leg_capsules(arch, pose);
  std::array<double, kLegCount> lengths{};
  for (int i = 0; i < kLegCount; ++i) {
    lengths[i] = legs[i].axis.direction().norm();
  }
  return lengths;
}

ArchitectureParams reference_architecture() {
  ArchitectureParams arch;
  arch.r_f = 150.0;
  arch.r_m = 75.0;
  arch.gamma_f = deg_to_rad(30.5);
  arch.gamma_m = deg_to_rad(40.5);
  arch.r_c = 8.5;
  arch.z0 = 300.0;
  return arch;
}

}  // namespace cfs
