#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quatdyn/dynamics.hpp"
#include "quatdyn/euler_angles.hpp"

namespace quatdyn {

enum class TorqueKind { Zero, Constant, Schedule };
enum class AttitudeInput { Quaternion, Euler };
enum class FrameKind { Inertial, Orbital };

/// Scenario description, loaded from a flat key = value text file.
///
/// Recognized keys: inertia, q0, omega0, torque, dt, duration, output_every,
/// attitude_input, frame, omega_o. Vector values are comma-separated; `#`
/// starts a comment. Torque values: `zero`, `constant, tx,ty,tz`, or
/// `schedule, t0,x,y,z; t1,x,y,z; ...` (piecewise constant from each t_i).
/// Attitude input: `quaternion` (q0 holds 4 components, renormalized if
/// within 1e-3 of unit) or `euler, phi,theta,psi` (radians, X-Y-Z factors).
/// Frame: `inertial` or `orbital` (omega_o then supplies the orbital rate;
/// recorded body rates are the inertial-equivalent R^T w_o + w').
struct SimConfig {
  std::array<double, 6> inertia{1, 1, 1, 0, 0, 0};  // Jxx,Jyy,Jzz,Jxy,Jxz,Jyz
  Vec4 q0{1, 0, 0, 0};
  Vec3 omega0{};
  TorqueKind torque_kind = TorqueKind::Zero;
  Vec3 torque_constant{};
  std::vector<std::pair<double, Vec3>> torque_schedule;
  double dt = 1e-3;
  double duration = 1.0;
  long output_every = 1;
  AttitudeInput attitude_input = AttitudeInput::Quaternion;
  EulerAngles euler0{};
  FrameKind frame = FrameKind::Inertial;
  Vec3 omega_o{};
};

struct ConfigViolation {
  std::string key;
  std::string message;
};

/// Parse a config file. Unknown keys and malformed values are reported as
/// violations; the returned config is only meaningful when the list is empty.
SimConfig parse_config(std::istream& in, std::vector<ConfigViolation>& violations);
SimConfig load_config(const std::string& path, std::vector<ConfigViolation>& violations);

/// Check every SimConfig invariant; empty result means valid.
std::vector<ConfigViolation> validate(const SimConfig& config);

/// One CSV row: t,q0,q1,q2,q3,w1,w2,w3,energy,Lx,Ly,Lz.
struct TrajectoryRecord {
  double t;
  Vec4 q;
  Vec3 w;       // body rad/s (inertial-equivalent in orbital frame mode)
  double energy;
  Vec3 angular_momentum;  // fixed frame, R J w'
};

struct SimSummary {
  long steps = 0;
  long rows = 0;
  double max_norm_drift = 0.0;       // max | |q| - 1 | before renormalization
  double energy_drift_rel = 0.0;     // max |E - E0| / max(|E0|, eps)
  double momentum_drift_max = 0.0;   // max componentwise |L - L0|
};

struct SimResult {
  std::vector<TrajectoryRecord> trajectory;
  SimSummary summary;
};

/// Propagate the configured scenario. Throws std::domain_error (message
/// includes t) if the state becomes non-finite. The config must have passed
/// validate().
SimResult run(const SimConfig& config);

/// CSV with header t,q0,q1,q2,q3,w1,w2,w3,energy,Lx,Ly,Lz, 17 significant
/// digits, \n line endings.
void write_csv(std::ostream& out, const std::vector<TrajectoryRecord>& rows);
void write_summary(std::ostream& out, const SimSummary& summary);

}  // namespace quatdyn
