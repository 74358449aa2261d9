#include "quatdyn/euler_angles.hpp"

namespace quatdyn {

Quaternion euler_to_quat(const EulerAngles& a) {
  const Quaternion q_phi{std::cos(0.5 * a.phi), {std::sin(0.5 * a.phi), 0.0, 0.0}};
  const Quaternion q_theta{std::cos(0.5 * a.theta), {0.0, std::sin(0.5 * a.theta), 0.0}};
  const Quaternion q_psi{std::cos(0.5 * a.psi), {0.0, 0.0, std::sin(0.5 * a.psi)}};
  return qmul(qmul(q_phi, q_theta), q_psi);
}

Mat3 euler_rotation_matrix(const EulerAngles& a) {
  const double cf = std::cos(a.phi), sf = std::sin(a.phi);
  const double ct = std::cos(a.theta), st = std::sin(a.theta);
  const double cp = std::cos(a.psi), sp = std::sin(a.psi);

  Mat3 r_phi = Mat3::identity();
  r_phi(1, 1) = cf; r_phi(1, 2) = -sf;
  r_phi(2, 1) = sf; r_phi(2, 2) = cf;

  Mat3 r_theta = Mat3::identity();
  r_theta(0, 0) = ct; r_theta(0, 2) = st;
  r_theta(2, 0) = -st; r_theta(2, 2) = ct;

  Mat3 r_psi = Mat3::identity();
  r_psi(0, 0) = cp; r_psi(0, 1) = -sp;
  r_psi(1, 0) = sp; r_psi(1, 1) = cp;

  return r_phi * r_theta * r_psi;
}

}  // namespace quatdyn
