#pragma once

#include "quatdyn/dynamics.hpp"

namespace quatdyn {

/// Symmetric 4x4 matrix Delta[v,w] with block structure
///
///   [ w.v        (w x v)^T                 ]
///   [ w x v      w v^T + v w^T - (w.v) I3  ]
///
/// so that d(v^T R w)/dq = 2 Delta[v,w] q as a polynomial identity in q.
/// Bilinear in (v, w).
Mat4 delta(Vec3 v, Vec3 w);

/// Gradient of v^T R(q) w with respect to the quaternion components:
/// 2 Delta[v,w] q. Valid for any q, unit or not.
Vec4 grad_single(Vec3 v, Vec3 w, const Vec4& q);

/// Gradient of v^T R(q)^T w: 2 Delta[w,v] q (equals grad_single with the
/// arguments swapped).
Vec4 grad_single_transposed(Vec3 v, Vec3 w, const Vec4& q);

/// Full gradient of u^T R J R^T u for unit q: 4 Delta[u, J R^T u] q.
/// The two-term collapse behind this formula uses R(q) being a rotation, so
/// unit q is required (tolerance 1e-9); off the sphere only the tangential
/// component is meaningful. Throws std::domain_error otherwise.
Vec4 grad_double(Vec3 u, const InertiaMatrix& inertia, const Vec4& q);

}  // namespace quatdyn
