#pragma once

#include "quatdyn/linalg.hpp"

namespace quatdyn {

/// Quaternion q = (q0, qv), scalar-first. Component order is (q0, q1, q2, q3)
/// everywhere, including the 4-vector view.
///
/// Rotation convention: for a unit q, the sandwich qbar o x o q maps a vector
/// from the fixed frame into the body frame, and q o x' o qbar maps body to
/// fixed. Note this is the opposite of several common robotics conventions.
struct Quaternion {
  double q0 = 1.0;
  Vec3 qv{};

  Quaternion() = default;
  Quaternion(double s, Vec3 v) : q0(s), qv(v) {}
  Quaternion(double a, double b, double c, double d) : q0(a), qv{b, c, d} {}
  explicit Quaternion(const Vec4& v) : q0(v[0]), qv{v[1], v[2], v[3]} {}

  Vec4 as_vec4() const { return {q0, qv.x, qv.y, qv.z}; }
};

inline Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.q0 + b.q0, a.qv + b.qv};
}
inline Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.q0 - b.q0, a.qv - b.qv};
}
inline Quaternion operator-(const Quaternion& a) { return {-a.q0, -a.qv}; }
inline Quaternion operator*(double s, const Quaternion& a) {
  return {s * a.q0, s * a.qv};
}

/// Hamilton product q o p = (q0 p0 - qv.pv, q0 pv + p0 qv + qv x pv).
Quaternion qmul(const Quaternion& q, const Quaternion& p);

inline Quaternion conj(const Quaternion& q) { return {q.q0, -q.qv}; }

inline double norm(const Quaternion& q) {
  return std::sqrt(q.q0 * q.q0 + dot(q.qv, q.qv));
}

/// q / |q|. Throws std::domain_error for |q| <= 1e-30.
Quaternion normalize(const Quaternion& q);

/// Unit quaternion (cos(phi/2), sin(phi/2) n) for a unit axis n.
/// Throws std::domain_error if | |n| - 1 | > 1e-9.
Quaternion from_axis_angle(Vec3 n, double phi);

/// Im{ qbar o (0,x) o q }: the fixed-frame vector x expressed in the body
/// frame. Throws std::domain_error for non-unit q (tolerance 1e-9).
Vec3 rotate_to_body(const Quaternion& q, Vec3 x);

/// Im{ q o (0,x') o qbar }: inverse of rotate_to_body.
Vec3 rotate_to_fixed(const Quaternion& q, Vec3 x_body);

inline bool is_unit(const Quaternion& q, double tol = 1e-9) {
  return std::abs(norm(q) - 1.0) <= tol;
}

}  // namespace quatdyn
