#pragma once

#include "quatdyn/quat.hpp"

namespace quatdyn {

// The 3x4 matrices E and G are linear in their 4-vector argument, so the
// time derivatives Edot, Gdot are obtained by feeding qdot to the same
// constructors.
//
//   E(p) = [ -p1  p0 -p3  p2 ]      G(p) = [ -p1  p0  p3 -p2 ]
//          [ -p2  p3  p0 -p1 ]             [ -p2 -p3  p0  p1 ]
//          [ -p3 -p2  p1  p0 ]             [ -p3  p2 -p1  p0 ]
//
// For unit q: E E^T = G G^T = I3, Eq = Gq = 0, R = E G^T.
Mat34 e_matrix(const Vec4& p);
Mat34 g_matrix(const Vec4& p);

inline Mat34 e_matrix(const Quaternion& q) { return e_matrix(q.as_vec4()); }
inline Mat34 g_matrix(const Quaternion& q) { return g_matrix(q.as_vec4()); }

/// Fixed-frame angular velocity omega = 2 E qdot.
/// Requires unit q and tangency q . qdot = 0 (tolerance 1e-9).
Vec3 omega_fixed_from_qdot(const Quaternion& q, const Vec4& qdot);

/// qdot = 1/2 E^T omega.
Vec4 qdot_from_omega_fixed(const Quaternion& q, Vec3 omega);

/// Body-frame angular velocity omega' = 2 G qdot.
Vec3 omega_body_from_qdot(const Quaternion& q, const Vec4& qdot);

/// qdot = 1/2 G^T omega'.
Vec4 qdot_from_omega_body(const Quaternion& q, Vec3 omega_body);

/// Rotation matrix R = E G^T, mapping body-frame vectors to the fixed frame:
/// R x' = rotate_to_fixed(q, x'). Throws std::domain_error for non-unit q.
Mat3 rotation_matrix(const Quaternion& q);

/// Skew-symmetric cross-product matrix: omega_cross_matrix(w) v = w x v.
/// Along a unit-quaternion path this equals 2 G Gdot^T with w = 2 G qdot.
Mat3 omega_cross_matrix(Vec3 omega_body);

}  // namespace quatdyn
