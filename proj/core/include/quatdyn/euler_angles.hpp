#pragma once

#include "quatdyn/kinematics.hpp"

namespace quatdyn {

/// Euler angles in the X-then-Y-then-Z factor convention: R = R_phi R_theta
/// R_psi with phi about axis 1, theta about axis 2, psi about axis 3. The
/// resulting rotation is the same map as rotation_matrix(euler_to_quat(a)).
/// Other sequences are not supported.
struct EulerAngles {
  double phi = 0.0;    // about axis 1, rad
  double theta = 0.0;  // about axis 2, rad
  double psi = 0.0;    // about axis 3, rad
};

/// q = q_phi o q_theta o q_psi, unit by construction.
Quaternion euler_to_quat(const EulerAngles& angles);

/// R_phi R_theta R_psi with the three single-axis matrices.
Mat3 euler_rotation_matrix(const EulerAngles& angles);

}  // namespace quatdyn
