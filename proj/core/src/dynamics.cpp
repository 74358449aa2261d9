#include "quatdyn/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

namespace quatdyn {

namespace {

Mat3 invert_spd(const Mat3& a) {
  // Adjugate over determinant; fine at 3x3 scale for well-conditioned J.
  const double d = det(a);
  Mat3 inv;
  inv(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  inv(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
  inv(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  inv(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  inv(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  inv(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
  inv(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  inv(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
  inv(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  return (1.0 / d) * inv;
}

}  // namespace

InertiaMatrix::InertiaMatrix(const Mat3& j) : j_(j) {
  const double scale = std::max(max_abs(j), 1.0);
  for (int r = 0; r < 3; ++r)
    for (int c = r + 1; c < 3; ++c)
      if (std::abs(j(r, c) - j(c, r)) > 1e-12 * scale)
        throw std::domain_error("InertiaMatrix: not symmetric");

  // Positive definiteness via leading principal minors.
  const double m1 = j(0, 0);
  const double m2 = j(0, 0) * j(1, 1) - j(0, 1) * j(1, 0);
  const double m3 = det(j);
  if (m1 <= 0.0 || m2 <= 0.0 || m3 <= 0.0)
    throw std::domain_error("InertiaMatrix: not positive definite");

  j_inv_ = invert_spd(j);
}

InertiaMatrix InertiaMatrix::diagonal(double jx, double jy, double jz) {
  Mat3 j;
  j(0, 0) = jx;
  j(1, 1) = jy;
  j(2, 2) = jz;
  return InertiaMatrix(j);
}

TorqueProfile zero_torque() {
  return [](double) { return Vec3{}; };
}

TorqueProfile constant_torque(Vec3 t_body) {
  return [t_body](double) { return t_body; };
}

TorqueProfile schedule_torque(std::vector<std::pair<double, Vec3>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return [entries = std::move(entries)](double t) {
    Vec3 value{};
    for (const auto& [t_i, torque] : entries) {
      if (t_i > t) break;
      value = torque;
    }
    return value;
  };
}

double kinetic_energy(const InertiaMatrix& inertia, Vec3 omega_body) {
  return 0.5 * dot(omega_body, inertia.matrix() * omega_body);
}

Vec4 generalized_force(const Quaternion& q, Vec3 torque_body) {
  if (!is_unit(q)) throw std::domain_error("generalized_force: non-unit quaternion");
  return 2.0 * transpose_mul(g_matrix(q), torque_body);
}

Vec3 euler_rhs(const InertiaMatrix& inertia, Vec3 omega_body, Vec3 torque_body) {
  const Vec3 gyro = cross(omega_body, inertia.matrix() * omega_body);
  return inertia.inverse() * (torque_body - gyro);
}

StateDerivative state_rhs(const InertiaMatrix& inertia, const BodyState& state,
                          Vec3 torque_body) {
  return {qdot_from_omega_body(state.q, state.omega_body),
          euler_rhs(inertia, state.omega_body, torque_body)};
}

BodyState rk4_step(const InertiaMatrix& inertia, const BodyState& state,
                   const TorqueProfile& torque, double t, double dt,
                   double* norm_drift) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk4_step: dt must be positive");
  if (!std::isfinite(state.q.q0) || !is_finite(state.q.qv) || !is_finite(state.omega_body))
    throw std::domain_error("rk4_step: non-finite state");

  // Derivatives evaluated on raw (possibly slightly off-sphere) intermediate
  // states; the tangency and unit checks in qdot_from_omega_body are bypassed
  // by forming 1/2 G^T w directly.
  auto rhs = [&](const Vec4& qv, Vec3 w, double time) {
    StateDerivative d;
    d.qdot = 0.5 * transpose_mul(g_matrix(qv), w);
    d.omega_dot = euler_rhs(inertia, w, torque(time));
    return d;
  };

  const Vec4 q0 = state.q.as_vec4();
  const Vec3 w0 = state.omega_body;

  const StateDerivative k1 = rhs(q0, w0, t);
  const StateDerivative k2 =
      rhs(q0 + (0.5 * dt) * k1.qdot, w0 + (0.5 * dt) * k1.omega_dot, t + 0.5 * dt);
  const StateDerivative k3 =
      rhs(q0 + (0.5 * dt) * k2.qdot, w0 + (0.5 * dt) * k2.omega_dot, t + 0.5 * dt);
  const StateDerivative k4 = rhs(q0 + dt * k3.qdot, w0 + dt * k3.omega_dot, t + dt);

  const Vec4 q1 =
      q0 + (dt / 6.0) * (k1.qdot + 2.0 * k2.qdot + 2.0 * k3.qdot + k4.qdot);
  const Vec3 w1 = w0 + (dt / 6.0) * (k1.omega_dot + 2.0 * k2.omega_dot +
                                     2.0 * k3.omega_dot + k4.omega_dot);

  if (norm_drift) *norm_drift = std::abs(norm(q1) - 1.0);
  return {normalize(Quaternion(q1)), w1};
}

double lagrange_multiplier(const InertiaMatrix& inertia, Vec3 omega_body) {
  return -2.0 * dot(omega_body, inertia.matrix() * omega_body);
}

}  // namespace quatdyn
