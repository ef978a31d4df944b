#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cfs/manipulator.hpp"
#include "test_support.hpp"

using namespace cfs;

TEST_CASE("platform_vertices for the reference architecture") {
  const auto arch = reference_architecture();
  const auto v = platform_vertices(arch);

  // b1 = 150 (cos(-30.5 deg), sin(-30.5 deg), 0), evaluated independently.
  CHECK(v.b[0].x() == doctest::Approx(129.2443740662289).epsilon(1e-12));
  CHECK(v.b[0].y() == doctest::Approx(-76.13075444410562).epsilon(1e-12));
  CHECK(v.b[0].z() == 0.0);

  Vec3 sum_b = Vec3::Zero();
  Vec3 sum_t = Vec3::Zero();
  for (int i = 0; i < kLegCount; ++i) {
    CHECK(std::abs(v.b[i].norm() - arch.r_f) < 1e-12 * arch.r_f);
    CHECK(std::abs(v.t[i].norm() - arch.r_m) < 1e-12 * arch.r_m);
    CHECK(v.b[i].z() == 0.0);
    CHECK(v.t[i].z() == 0.0);
    sum_b += v.b[i];
    sum_t += v.t[i];
  }
  CHECK(sum_b.norm() < 1e-12);
  CHECK(sum_t.norm() < 1e-12);

  // b1, b2 mirror across X.
  CHECK(v.b[0].x() == doctest::Approx(v.b[1].x()));
  CHECK(v.b[0].y() == doctest::Approx(-v.b[1].y()));
  CHECK(v.t[0].x() == doctest::Approx(v.t[1].x()));
  CHECK(v.t[0].y() == doctest::Approx(-v.t[1].y()));
}

TEST_CASE("vertex angle ordering alternates 2 gamma and 2 pi / 3 - 2 gamma") {
  for (double gamma : {0.1, 0.5323, 0.9}) {
    const auto a = vertex_angles(gamma);
    for (int i = 0; i + 1 < kLegCount; ++i) {
      const double expected = (i % 2 == 0) ? 2 * gamma : 2 * std::numbers::pi / 3 - 2 * gamma;
      CHECK(a[i + 1] - a[i] == doctest::Approx(expected).epsilon(1e-14));
    }
  }
}

TEST_CASE("architecture validation") {
  auto arch = reference_architecture();
  CHECK_NOTHROW(arch.validate());

  auto bad = arch;
  bad.r_c = 0.0;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("r_c"), std::invalid_argument);
  bad = arch;
  bad.gamma_f = std::numbers::pi / 3;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("gamma_f"), std::invalid_argument);
  bad = arch;
  bad.gamma_m = -0.1;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("gamma_m"), std::invalid_argument);
  bad = arch;
  bad.z0 = -1;
  CHECK_THROWS_AS(platform_vertices(bad), std::invalid_argument);
}

TEST_CASE("leg_capsules") {
  const auto arch = reference_architecture();

  SUBCASE("neutral pose") {
    const auto legs = leg_capsules(arch, Pose{arch.neutral_point(), Vec3::Zero()});
    // a1 = t1 + (0, 0, 300) with t1 = 75 (cos(-40.5 deg), sin(-40.5 deg), 0).
    CHECK(legs[0].axis.a.x() == doctest::Approx(129.2443740662289));
    CHECK(legs[0].axis.b.x() == doctest::Approx(57.03044742000232));
    CHECK(legs[0].axis.b.y() == doctest::Approx(-48.708603624763775));
    CHECK(legs[0].axis.b.z() == doctest::Approx(300.0));
    for (const auto& leg : legs) CHECK(leg.radius == 8.5);
  }

  SUBCASE("identity pose maps t_i onto the fixed plane") {
    const auto v = platform_vertices(arch);
    const auto legs = leg_capsules(arch, Pose{});
    for (int i = 0; i < kLegCount; ++i) {
      CHECK((legs[i].axis.a - v.b[i]).norm() == 0.0);
      CHECK((legs[i].axis.b - v.t[i]).norm() == 0.0);
    }
  }

  SUBCASE("pure translation shifts every a_i by the same offset") {
    cfs::testing::Rng rng(23);
    const auto base = leg_capsules(arch, Pose{arch.neutral_point(), Vec3::Zero()});
    for (int k = 0; k < 100; ++k) {
      const Vec3 delta = rng.in_cube(100.0);
      const auto moved = leg_capsules(arch, Pose{arch.neutral_point() + delta, Vec3::Zero()});
      for (int i = 0; i < kLegCount; ++i) {
        CHECK(((moved[i].axis.b - base[i].axis.b) - delta).norm() < 1e-12);
        CHECK(moved[i].axis.a == base[i].axis.a);
      }
    }
  }

  SUBCASE("non-finite position is rejected") {
    CHECK_THROWS_AS(leg_capsules(arch, Pose{Vec3(0, std::nan(""), 0), Vec3::Zero()}), std::invalid_argument);
  }
}

TEST_CASE("leg_lengths") {
  const auto arch = reference_architecture();
  const auto home = leg_lengths(arch, Pose{arch.neutral_point(), Vec3::Zero()});
  for (double l : home) CHECK(l == doctest::Approx(home[0]).epsilon(1e-12));
  CHECK(home[0] == doctest::Approx(309.78512804398036).epsilon(1e-12));

  cfs::testing::Rng rng(29);
  for (int k = 0; k < 100; ++k) {
    const auto lengths = leg_lengths(arch, Pose{rng.in_cube(400.0), rng.in_ball(3.0)});
    for (double l : lengths) CHECK(l >= 0.0);
  }
}
