#include <doctest.h>

#include <numbers>

#include "quatdyn/euler_angles.hpp"
#include "test_helpers.hpp"

using namespace quatdyn;
using namespace quatdyn::testing;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

EulerAngles random_angles() {
  return {uniform(-kTwoPi, kTwoPi), uniform(-kTwoPi, kTwoPi), uniform(-kTwoPi, kTwoPi)};
}
}  // namespace

TEST_CASE("euler_to_quat reference values") {
  const Quaternion q0 = euler_to_quat({0, 0, 0});
  CHECK(q0.q0 == 1.0);
  CHECK(norm(q0.qv) == 0.0);

  const double c = std::cos(kPi / 4), s = std::sin(kPi / 4);
  const Quaternion qz = euler_to_quat({0, 0, kPi / 2});
  CHECK(std::abs(qz.q0 - c) <= 1e-15);
  CHECK(max_abs_diff(qz.qv, {0, 0, s}) <= 1e-15);

  const double h = std::sqrt(2.0) / 2.0;
  const Quaternion q = euler_to_quat({kPi / 2, kPi / 2, kPi / 2});
  CHECK(std::abs(q.q0) <= 1e-15);
  CHECK(max_abs_diff(q.qv, {h, 0, h}) <= 1e-15);
}

TEST_CASE("euler_to_quat equals the three-factor product and is unit") {
  for (int n = 0; n < 100; ++n) {
    const EulerAngles a = random_angles();
    const Quaternion q_phi{std::cos(a.phi / 2), {std::sin(a.phi / 2), 0, 0}};
    const Quaternion q_theta{std::cos(a.theta / 2), {0, std::sin(a.theta / 2), 0}};
    const Quaternion q_psi{std::cos(a.psi / 2), {0, 0, std::sin(a.psi / 2)}};
    const Quaternion expected = qmul(qmul(q_phi, q_theta), q_psi);
    const Quaternion got = euler_to_quat(a);
    CHECK(std::abs(got.q0 - expected.q0) <= 1e-15);
    CHECK(max_abs_diff(got.qv, expected.qv) <= 1e-15);
    CHECK(std::abs(norm(got) - 1.0) <= 1e-15);
  }
}

TEST_CASE("euler_rotation_matrix reference values") {
  CHECK(max_abs(euler_rotation_matrix({0, 0, 0}) - Mat3::identity()) == 0.0);

  Mat3 rz;
  rz(0, 1) = -1;
  rz(1, 0) = 1;
  rz(2, 2) = 1;
  CHECK(max_abs(euler_rotation_matrix({0, 0, kPi / 2}) - rz) <= 1e-15);
}

TEST_CASE("matrix route agrees with the quaternion route") {
  for (int n = 0; n < 100; ++n) {
    const EulerAngles a = random_angles();
    CHECK(max_abs(rotation_matrix(euler_to_quat(a)) - euler_rotation_matrix(a)) <=
          1e-12);
  }
}

TEST_CASE("2 pi periodicity and quaternion sign flip") {
  for (int n = 0; n < 30; ++n) {
    const EulerAngles a = random_angles();
    for (int axis = 0; axis < 3; ++axis) {
      EulerAngles shifted = a;
      (axis == 0 ? shifted.phi : axis == 1 ? shifted.theta : shifted.psi) += kTwoPi;
      CHECK(max_abs(euler_rotation_matrix(a) - euler_rotation_matrix(shifted)) <=
            1e-12);
      const Quaternion q = euler_to_quat(a);
      const Quaternion qs = euler_to_quat(shifted);
      CHECK(std::abs(qs.q0 + q.q0) <= 1e-12);
      CHECK(max_abs_diff(qs.qv, -q.qv) <= 1e-12);
    }
  }
}
