#pragma once

#include <array>
#include <cmath>

namespace quatdyn {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double& operator[](int i) { return (&x)[i]; }
  double operator[](int i) const { return (&x)[i]; }
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator*(Vec3 a, double s) { return s * a; }

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

inline bool is_finite(Vec3 a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// 4-vector, used for quaternion coordinates and their rates.
using Vec4 = std::array<double, 4>;

inline Vec4 operator+(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline Vec4 operator-(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline Vec4 operator*(double s, const Vec4& a) {
  return {s * a[0], s * a[1], s * a[2], s * a[3]};
}
inline double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}
inline double norm(const Vec4& a) { return std::sqrt(dot(a, a)); }

// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> m{};

  double& operator()(int r, int c) { return m[3 * r + c]; }
  double operator()(int r, int c) const { return m[3 * r + c]; }

  static Mat3 identity() {
    Mat3 a;
    a(0, 0) = a(1, 1) = a(2, 2) = 1.0;
    return a;
  }
  static Mat3 zero() { return Mat3{}; }
};

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int i = 0; i < 9; ++i) c.m[i] = a.m[i] + b.m[i];
  return c;
}
inline Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int i = 0; i < 9; ++i) c.m[i] = a.m[i] - b.m[i];
  return c;
}
inline Mat3 operator*(double s, const Mat3& a) {
  Mat3 c;
  for (int i = 0; i < 9; ++i) c.m[i] = s * a.m[i];
  return c;
}
inline Vec3 operator*(const Mat3& a, Vec3 v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}
inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 3; ++k)
      for (int col = 0; col < 3; ++col) c(r, col) += a(r, k) * b(k, col);
  return c;
}

inline Mat3 transpose(const Mat3& a) {
  Mat3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t(c, r) = a(r, c);
  return t;
}

inline double det(const Mat3& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

// Outer product v w^T.
inline Mat3 outer(Vec3 v, Vec3 w) {
  Mat3 a;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a(r, c) = v[r] * w[c];
  return a;
}

inline double max_abs(const Mat3& a) {
  double s = 0.0;
  for (double v : a.m) s = std::max(s, std::abs(v));
  return s;
}

// Row-major 4x4 matrix.
struct Mat4 {
  std::array<double, 16> m{};

  double& operator()(int r, int c) { return m[4 * r + c]; }
  double operator()(int r, int c) const { return m[4 * r + c]; }

  static Mat4 identity() {
    Mat4 a;
    a(0, 0) = a(1, 1) = a(2, 2) = a(3, 3) = 1.0;
    return a;
  }
};

inline Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 c;
  for (int i = 0; i < 16; ++i) c.m[i] = a.m[i] + b.m[i];
  return c;
}
inline Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 c;
  for (int i = 0; i < 16; ++i) c.m[i] = a.m[i] - b.m[i];
  return c;
}
inline Mat4 operator*(double s, const Mat4& a) {
  Mat4 c;
  for (int i = 0; i < 16; ++i) c.m[i] = s * a.m[i];
  return c;
}
inline Vec4 operator*(const Mat4& a, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += a(i, j) * v[j];
  return r;
}

inline double max_abs(const Mat4& a) {
  double s = 0.0;
  for (double v : a.m) s = std::max(s, std::abs(v));
  return s;
}

// Row-major 3x4 matrix (the E/G family).
struct Mat34 {
  std::array<double, 12> m{};

  double& operator()(int r, int c) { return m[4 * r + c]; }
  double operator()(int r, int c) const { return m[4 * r + c]; }
};

inline Vec3 operator*(const Mat34& a, const Vec4& v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    for (int j = 0; j < 4; ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

// A^T w for 3x4 A: a 4-vector.
inline Vec4 transpose_mul(const Mat34& a, Vec3 w) {
  Vec4 r{};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 3; ++i) r[j] += a(i, j) * w[i];
  return r;
}

// A B^T for 3x4 A, B: a 3x3 matrix.
inline Mat3 mul_bt(const Mat34& a, const Mat34& b) {
  Mat3 c;
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) {
      double v = 0.0;
      for (int k = 0; k < 4; ++k) v += a(r, k) * b(s, k);
      c(r, s) = v;
    }
  return c;
}

// A^T B for 3x4 A, B: a 4x4 matrix.
inline Mat4 tmul(const Mat34& a, const Mat34& b) {
  Mat4 c;
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) {
      double v = 0.0;
      for (int k = 0; k < 3; ++k) v += a(k, r) * b(k, s);
      c(r, s) = v;
    }
  return c;
}

}  // namespace quatdyn
