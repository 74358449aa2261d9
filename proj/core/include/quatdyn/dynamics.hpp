#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "quatdyn/kinematics.hpp"

namespace quatdyn {

/// Symmetric positive-definite inertia matrix J (kg m^2). The inverse is
/// computed once at construction and cached.
class InertiaMatrix {
 public:
  /// Throws std::domain_error if J is not symmetric (tolerance 1e-12 relative
  /// to the largest entry) or not positive definite.
  explicit InertiaMatrix(const Mat3& j);

  /// Principal-moment convenience constructor, diag(jx, jy, jz).
  static InertiaMatrix diagonal(double jx, double jy, double jz);

  const Mat3& matrix() const { return j_; }
  const Mat3& inverse() const { return j_inv_; }

 private:
  Mat3 j_;
  Mat3 j_inv_;
};

/// Integrated state of the rotational dynamics: attitude quaternion (body to
/// fixed, per the quat.hpp sandwich convention) and body angular velocity.
struct BodyState {
  Quaternion q;
  Vec3 omega_body;
};

/// Body-frame torque as a function of time (N m). Must be re-entrant.
using TorqueProfile = std::function<Vec3(double t)>;

TorqueProfile zero_torque();
TorqueProfile constant_torque(Vec3 t_body);

/// Piecewise-constant schedule: entries (t_i, T_i) sorted by time; the value
/// is T_i for t in [t_i, t_{i+1}), zero before the first entry.
TorqueProfile schedule_torque(std::vector<std::pair<double, Vec3>> entries);

/// Rotational kinetic energy 1/2 w'^T J w'.
double kinetic_energy(const InertiaMatrix& inertia, Vec3 omega_body);

/// Generalized force conjugate to quaternion coordinates: F_q = 2 G^T T'.
/// Always tangent to q (q . F_q = 0). Throws for non-unit q.
Vec4 generalized_force(const Quaternion& q, Vec3 torque_body);

/// Euler's equation: wdot' = J^-1 T' - J^-1 (w' x J w').
Vec3 euler_rhs(const InertiaMatrix& inertia, Vec3 omega_body, Vec3 torque_body);

struct StateDerivative {
  Vec4 qdot;
  Vec3 omega_dot;
};

/// Coupled right-hand side: qdot = 1/2 G^T w' together with euler_rhs.
StateDerivative state_rhs(const InertiaMatrix& inertia, const BodyState& state,
                          Vec3 torque_body);

/// One classical RK4 step over (q, w'); the returned quaternion is
/// renormalized. If norm_drift is given it receives | |q| - 1 | of the raw
/// quaternion before renormalization. Throws std::invalid_argument for
/// dt <= 0 and std::domain_error for a non-finite state.
BodyState rk4_step(const InertiaMatrix& inertia, const BodyState& state,
                   const TorqueProfile& torque, double t, double dt,
                   double* norm_drift = nullptr);

/// Closed form of the constraint multiplier, lambda = -2 w'^T J w'
/// (equivalently -4 x kinetic energy). Test oracle for the unprojected
/// Euler-Lagrange residual; never used by the propagator.
double lagrange_multiplier(const InertiaMatrix& inertia, Vec3 omega_body);

}  // namespace quatdyn
