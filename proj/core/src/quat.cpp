#include "quatdyn/quat.hpp"

#include <stdexcept>

namespace quatdyn {

Quaternion qmul(const Quaternion& q, const Quaternion& p) {
  return {q.q0 * p.q0 - dot(q.qv, p.qv),
          q.q0 * p.qv + p.q0 * q.qv + cross(q.qv, p.qv)};
}

Quaternion normalize(const Quaternion& q) {
  const double n = norm(q);
  if (n <= 1e-30) throw std::domain_error("normalize: near-zero quaternion");
  return (1.0 / n) * q;
}

Quaternion from_axis_angle(Vec3 n, double phi) {
  if (std::abs(norm(n) - 1.0) > 1e-9)
    throw std::domain_error("from_axis_angle: axis must be unit length");
  return {std::cos(0.5 * phi), std::sin(0.5 * phi) * n};
}

static void require_unit(const Quaternion& q, const char* where) {
  if (!is_unit(q)) throw std::domain_error(std::string(where) + ": non-unit quaternion");
}

Vec3 rotate_to_body(const Quaternion& q, Vec3 x) {
  require_unit(q, "rotate_to_body");
  return qmul(qmul(conj(q), Quaternion{0.0, x}), q).qv;
}

Vec3 rotate_to_fixed(const Quaternion& q, Vec3 x_body) {
  require_unit(q, "rotate_to_fixed");
  return qmul(qmul(q, Quaternion{0.0, x_body}), conj(q)).qv;
}

}  // namespace quatdyn
