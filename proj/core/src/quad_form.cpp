#include "quatdyn/quad_form.hpp"

#include <stdexcept>

namespace quatdyn {

Mat4 delta(Vec3 v, Vec3 w) {
  const double wv = dot(w, v);
  const Vec3 wxv = cross(w, v);
  const Mat3 block = outer(w, v) + outer(v, w) - wv * Mat3::identity();

  Mat4 d;
  d(0, 0) = wv;
  for (int i = 0; i < 3; ++i) {
    d(0, i + 1) = wxv[i];
    d(i + 1, 0) = wxv[i];
    for (int j = 0; j < 3; ++j) d(i + 1, j + 1) = block(i, j);
  }
  return d;
}

Vec4 grad_single(Vec3 v, Vec3 w, const Vec4& q) {
  return 2.0 * (delta(v, w) * q);
}

Vec4 grad_single_transposed(Vec3 v, Vec3 w, const Vec4& q) {
  return 2.0 * (delta(w, v) * q);
}

Vec4 grad_double(Vec3 u, const InertiaMatrix& inertia, const Vec4& q) {
  if (std::abs(norm(q) - 1.0) > 1e-9)
    throw std::domain_error("grad_double: non-unit quaternion");
  const Mat3 rt = transpose(rotation_matrix(Quaternion(q)));
  const Vec3 jrtu = inertia.matrix() * (rt * u);
  return 4.0 * (delta(u, jrtu) * q);
}

}  // namespace quatdyn
