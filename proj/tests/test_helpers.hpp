#pragma once

#include <random>

#include "quatdyn/quat.hpp"

namespace quatdyn::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20260825);
  return gen;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Vec3 random_vec3(double scale = 1.0) {
  return {scale * uniform(), scale * uniform(), scale * uniform()};
}

inline Vec3 random_unit_vec3() {
  Vec3 v;
  do {
    v = random_vec3();
  } while (norm(v) < 1e-3);
  return (1.0 / norm(v)) * v;
}

inline Quaternion random_quaternion(double scale = 1.0) {
  return {scale * uniform(), random_vec3(scale)};
}

inline Quaternion random_unit_quaternion() {
  Quaternion q;
  do {
    q = random_quaternion();
  } while (norm(q) < 1e-3);
  return normalize(q);
}

// A tangent 4-vector at q: p - (p.q) q for random p.
inline Vec4 random_tangent(const Quaternion& q) {
  const Vec4 qv = q.as_vec4();
  Vec4 p{uniform(), uniform(), uniform(), uniform()};
  return p - dot(p, qv) * qv;
}

inline double max_abs_diff(const Vec3& a, const Vec3& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline double max_abs_diff(const Vec4& a, const Vec4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace quatdyn::testing
