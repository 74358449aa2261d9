#include "quatdyn/kinematics.hpp"

#include <stdexcept>

namespace quatdyn {

Mat34 e_matrix(const Vec4& p) {
  Mat34 e;
  e(0, 0) = -p[1]; e(0, 1) =  p[0]; e(0, 2) = -p[3]; e(0, 3) =  p[2];
  e(1, 0) = -p[2]; e(1, 1) =  p[3]; e(1, 2) =  p[0]; e(1, 3) = -p[1];
  e(2, 0) = -p[3]; e(2, 1) = -p[2]; e(2, 2) =  p[1]; e(2, 3) =  p[0];
  return e;
}

Mat34 g_matrix(const Vec4& p) {
  Mat34 g;
  g(0, 0) = -p[1]; g(0, 1) =  p[0]; g(0, 2) =  p[3]; g(0, 3) = -p[2];
  g(1, 0) = -p[2]; g(1, 1) = -p[3]; g(1, 2) =  p[0]; g(1, 3) =  p[1];
  g(2, 0) = -p[3]; g(2, 1) =  p[2]; g(2, 2) = -p[1]; g(2, 3) =  p[0];
  return g;
}

static void require_unit_q(const Quaternion& q, const char* where) {
  if (!is_unit(q)) throw std::domain_error(std::string(where) + ": non-unit quaternion");
}

static void require_tangent(const Quaternion& q, const Vec4& qdot, const char* where) {
  if (std::abs(dot(q.as_vec4(), qdot)) > 1e-9)
    throw std::domain_error(std::string(where) + ": qdot not tangent (q . qdot != 0)");
}

Vec3 omega_fixed_from_qdot(const Quaternion& q, const Vec4& qdot) {
  require_unit_q(q, "omega_fixed_from_qdot");
  require_tangent(q, qdot, "omega_fixed_from_qdot");
  return 2.0 * (e_matrix(q) * qdot);
}

Vec4 qdot_from_omega_fixed(const Quaternion& q, Vec3 omega) {
  require_unit_q(q, "qdot_from_omega_fixed");
  return 0.5 * transpose_mul(e_matrix(q), omega);
}

Vec3 omega_body_from_qdot(const Quaternion& q, const Vec4& qdot) {
  require_unit_q(q, "omega_body_from_qdot");
  require_tangent(q, qdot, "omega_body_from_qdot");
  return 2.0 * (g_matrix(q) * qdot);
}

Vec4 qdot_from_omega_body(const Quaternion& q, Vec3 omega_body) {
  require_unit_q(q, "qdot_from_omega_body");
  return 0.5 * transpose_mul(g_matrix(q), omega_body);
}

Mat3 rotation_matrix(const Quaternion& q) {
  require_unit_q(q, "rotation_matrix");
  return mul_bt(e_matrix(q), g_matrix(q));
}

Mat3 omega_cross_matrix(Vec3 w) {
  Mat3 s;
  s(0, 1) = -w.z; s(0, 2) =  w.y;
  s(1, 0) =  w.z; s(1, 2) = -w.x;
  s(2, 0) = -w.y; s(2, 1) =  w.x;
  return s;
}

}  // namespace quatdyn
