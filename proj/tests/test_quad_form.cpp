#include <doctest.h>

#include <stdexcept>

#include "quatdyn/quad_form.hpp"
#include "test_helpers.hpp"

using namespace quatdyn;
using namespace quatdyn::testing;

namespace {

// Finite-difference oracle: raw 4-vector of partials of f(q).
template <typename F>
Vec4 fd_gradient(F&& f, const Vec4& q, double h = 1e-5) {
  Vec4 g{};
  for (int i = 0; i < 4; ++i) {
    Vec4 plus = q, minus = q;
    plus[i] += h;
    minus[i] -= h;
    g[i] = (f(plus) - f(minus)) / (2.0 * h);
  }
  return g;
}

double quad_form(Vec3 v, Vec3 w, const Vec4& q) {
  // v^T R w with R = E G^T, evaluated without the unit-q gate of
  // rotation_matrix (the polynomial extension off the sphere).
  const Mat3 r = mul_bt(e_matrix(q), g_matrix(q));
  return dot(v, r * w);
}

Vec4 project_tangent(const Vec4& p, const Vec4& q) { return p - dot(p, q) * q; }

InertiaMatrix random_inertia() {
  Mat3 a;
  for (int i = 0; i < 9; ++i) a.m[i] = uniform();
  return InertiaMatrix(transpose(a) * a + Mat3::identity());
}

}  // namespace

TEST_CASE("delta block structure on simple inputs") {
  const Mat4 d = delta({1, 0, 0}, {1, 0, 0});
  Mat4 expected;
  expected(0, 0) = 1;
  expected(1, 1) = 1;
  expected(2, 2) = -1;
  expected(3, 3) = -1;
  CHECK(max_abs(d - expected) == 0.0);

  CHECK(max_abs(delta({0, 0, 0}, random_vec3())) == 0.0);
  CHECK(max_abs(delta(random_vec3(), {0, 0, 0})) == 0.0);
}

TEST_CASE("delta is symmetric and bilinear") {
  for (int n = 0; n < 100; ++n) {
    const Vec3 v = random_vec3(2.0), w = random_vec3(2.0);
    const Mat4 d = delta(v, w);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) CHECK(d(r, c) == d(c, r));

    // scaling
    CHECK(max_abs(delta(2.0 * v, 3.0 * w) - 6.0 * d) <= 1e-12);

    // additivity in each slot
    const Vec3 v2 = random_vec3(2.0), w2 = random_vec3(2.0);
    CHECK(max_abs(delta(v + v2, w) - (delta(v, w) + delta(v2, w))) <= 1e-12);
    CHECK(max_abs(delta(v, w + w2) - (delta(v, w) + delta(v, w2))) <= 1e-12);

    // double sum
    const Mat4 lhs = delta(v + v2, w + w2);
    const Mat4 rhs = delta(v, w) + delta(v, w2) + delta(v2, w) + delta(v2, w2);
    CHECK(max_abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("q^T Delta q equals v^T R w for unit q") {
  for (int n = 0; n < 100; ++n) {
    const Vec3 v = random_vec3(2.0), w = random_vec3(2.0);
    const Vec4 q = random_unit_quaternion().as_vec4();
    CHECK(dot(q, delta(v, w) * q) ==
          doctest::Approx(quad_form(v, w, q)).epsilon(1e-12));
  }
}

TEST_CASE("grad_single explicit gradient of R11") {
  // v = w = e1 picks out R11 = q0^2 + q1^2 - q2^2 - q3^2.
  for (int n = 0; n < 20; ++n) {
    const Vec4 q{uniform(), uniform(), uniform(), uniform()};
    const Vec4 g = grad_single({1, 0, 0}, {1, 0, 0}, q);
    CHECK(testing::max_abs_diff(
              g, Vec4{2 * q[0], 2 * q[1], -2 * q[2], -2 * q[3]}) <= 1e-15);
  }
  CHECK(testing::max_abs_diff(grad_single(random_vec3(), random_vec3(), {0, 0, 0, 0}),
                              Vec4{0, 0, 0, 0}) == 0.0);
}

TEST_CASE("grad_single matches finite differences off the sphere") {
  for (int n = 0; n < 100; ++n) {
    const Vec3 v = random_vec3(2.0), w = random_vec3(2.0);
    const Vec4 q{uniform(2.0, 3.0) * uniform(), uniform(), uniform(), uniform()};
    const Vec4 fd = fd_gradient([&](const Vec4& p) { return quad_form(v, w, p); }, q);
    const Vec4 g = grad_single(v, w, q);
    const double scale = std::max(1.0, norm(g));
    CHECK(testing::max_abs_diff(g, fd) <= 1e-6 * scale);
  }
}

TEST_CASE("grad_single_transposed") {
  for (int n = 0; n < 100; ++n) {
    const Vec3 v = random_vec3(2.0), w = random_vec3(2.0);
    const Vec4 q{uniform(), uniform(), uniform(), uniform()};

    // exactly grad_single with swapped arguments
    CHECK(testing::max_abs_diff(grad_single_transposed(v, w, q),
                                grad_single(w, v, q)) == 0.0);
    // v = w case collapses to grad_single
    CHECK(testing::max_abs_diff(grad_single_transposed(v, v, q),
                                grad_single(v, v, q)) == 0.0);

    const Vec4 fd = fd_gradient(
        [&](const Vec4& p) {
          const Mat3 rt = transpose(mul_bt(e_matrix(p), g_matrix(p)));
          return dot(v, rt * w);
        },
        q);
    const Vec4 g = grad_single_transposed(v, w, q);
    CHECK(testing::max_abs_diff(g, fd) <= 1e-6 * std::max(1.0, norm(g)));
  }
}

TEST_CASE("grad_double requires unit q") {
  CHECK_THROWS_AS(grad_double({1, 0, 0}, InertiaMatrix::diagonal(1, 2, 3),
                              Vec4{2, 0, 0, 0}),
                  std::domain_error);
  CHECK(testing::max_abs_diff(grad_double({0, 0, 0}, InertiaMatrix::diagonal(1, 2, 3),
                                          Vec4{1, 0, 0, 0}),
                              Vec4{0, 0, 0, 0}) == 0.0);
}

TEST_CASE("grad_double with J = I is radial") {
  // u^T R R^T u = |u|^2 on the sphere, so the tangential gradient is zero.
  for (int n = 0; n < 50; ++n) {
    const Vec4 q = random_unit_quaternion().as_vec4();
    const Vec3 u = random_vec3(2.0);
    const Vec4 g = grad_double(u, InertiaMatrix::diagonal(1, 1, 1), q);
    const Vec4 tangential = project_tangent(g, q);
    CHECK(norm(tangential) <= 1e-12 * std::max(1.0, norm(g)));
  }
}

TEST_CASE("grad_double matches tangentially projected finite differences") {
  for (int n = 0; n < 100; ++n) {
    const Vec4 q = random_unit_quaternion().as_vec4();
    const Vec3 u = random_vec3(2.0);
    const InertiaMatrix j = random_inertia();

    auto f = [&](const Vec4& p) {
      const Mat3 r = mul_bt(e_matrix(p), g_matrix(p));
      const Vec3 rtu = transpose(r) * u;
      return dot(u, r * (j.matrix() * rtu));
    };
    const Vec4 fd = project_tangent(fd_gradient(f, q), q);
    const Vec4 g = project_tangent(grad_double(u, j, q), q);
    CHECK(testing::max_abs_diff(g, fd) <= 1e-6 * std::max(1.0, norm(g)));
  }
}
