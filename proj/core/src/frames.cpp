#include "quatdyn/frames.hpp"

#include <stdexcept>

namespace quatdyn {

Quaternion compose_attitude(const Quaternion& q01, const Quaternion& q12) {
  if (!is_unit(q01) || !is_unit(q12))
    throw std::domain_error("compose_attitude: non-unit quaternion");
  return normalize(qmul(q01, q12));
}

Vec3 compose_omega_body(const Quaternion& q12, Vec3 omega01_in_frame1,
                        Vec3 omega12_in_frame2) {
  return rotate_to_body(q12, omega01_in_frame1) + omega12_in_frame2;
}

Quaternion chain_attitude(const FrameChain& chain) {
  Quaternion q;  // identity
  for (const auto& link : chain) q = compose_attitude(q, link.attitude);
  return q;
}

std::optional<Vec3> chain_omega_body(const FrameChain& chain) {
  Vec3 omega{};
  for (const auto& link : chain) {
    if (!link.omega_child) return std::nullopt;
    omega = compose_omega_body(link.attitude, omega, *link.omega_child);
  }
  return omega;
}

Vec3 omega_inertial_from_orbital(const Mat3& r, Vec3 omega_o,
                                 Vec3 omega_body_noninertial) {
  const Mat3 residual = r * transpose(r) - Mat3::identity();
  if (max_abs(residual) >= 1e-6)
    throw std::domain_error("omega_inertial_from_orbital: matrix not orthogonal");
  return transpose(r) * omega_o + omega_body_noninertial;
}

}  // namespace quatdyn
