#include "quatdyn/sim.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "quatdyn/frames.hpp"

namespace quatdyn {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

bool parse_doubles(const std::vector<std::string>& tokens, size_t offset,
                   double* out, size_t count) {
  if (tokens.size() != offset + count) return false;
  for (size_t i = 0; i < count; ++i) {
    try {
      size_t pos = 0;
      out[i] = std::stod(tokens[offset + i], &pos);
      if (pos != tokens[offset + i].size()) return false;
    } catch (const std::exception&) {
      return false;
    }
  }
  return true;
}

void bad(std::vector<ConfigViolation>& v, const std::string& key,
         const std::string& msg) {
  v.push_back({key, msg});
}

}  // namespace

SimConfig parse_config(std::istream& in, std::vector<ConfigViolation>& violations) {
  SimConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      bad(violations, line, "expected key = value");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto tokens = split(value, ',');

    if (key == "inertia") {
      if (!parse_doubles(tokens, 0, cfg.inertia.data(), 6))
        bad(violations, key, "expected 6 comma-separated reals (Jxx,Jyy,Jzz,Jxy,Jxz,Jyz)");
    } else if (key == "q0") {
      if (!parse_doubles(tokens, 0, cfg.q0.data(), 4))
        bad(violations, key, "expected 4 comma-separated reals");
    } else if (key == "omega0") {
      if (!parse_doubles(tokens, 0, &cfg.omega0.x, 3))
        bad(violations, key, "expected 3 comma-separated reals");
    } else if (key == "omega_o") {
      if (!parse_doubles(tokens, 0, &cfg.omega_o.x, 3))
        bad(violations, key, "expected 3 comma-separated reals");
    } else if (key == "torque") {
      if (tokens.empty()) {
        bad(violations, key, "missing torque kind");
      } else if (tokens[0] == "zero" && tokens.size() == 1) {
        cfg.torque_kind = TorqueKind::Zero;
      } else if (tokens[0] == "constant") {
        cfg.torque_kind = TorqueKind::Constant;
        if (!parse_doubles(tokens, 1, &cfg.torque_constant.x, 3))
          bad(violations, key, "constant torque expects 3 reals");
      } else if (tokens[0] == "schedule") {
        cfg.torque_kind = TorqueKind::Schedule;
        // schedule, t0,x,y,z; t1,x,y,z; ...
        const auto body = trim(value.substr(value.find(',') + 1));
        cfg.torque_schedule.clear();
        bool ok = !body.empty();
        for (const auto& entry : split(body, ';')) {
          double vals[4];
          if (!parse_doubles(split(entry, ','), 0, vals, 4)) {
            ok = false;
            break;
          }
          cfg.torque_schedule.push_back({vals[0], {vals[1], vals[2], vals[3]}});
        }
        if (!ok) bad(violations, key, "schedule entries must be t,x,y,z separated by ';'");
      } else {
        bad(violations, key, "unknown torque kind '" + tokens[0] + "'");
      }
    } else if (key == "attitude_input") {
      if (tokens.size() == 1 && tokens[0] == "quaternion") {
        cfg.attitude_input = AttitudeInput::Quaternion;
      } else if (!tokens.empty() && tokens[0] == "euler") {
        cfg.attitude_input = AttitudeInput::Euler;
        double angles[3];
        if (parse_doubles(tokens, 1, angles, 3))
          cfg.euler0 = {angles[0], angles[1], angles[2]};
        else
          bad(violations, key, "euler input expects 3 angles (rad)");
      } else {
        bad(violations, key, "expected 'quaternion' or 'euler, phi,theta,psi'");
      }
    } else if (key == "frame") {
      if (value == "inertial")
        cfg.frame = FrameKind::Inertial;
      else if (value == "orbital")
        cfg.frame = FrameKind::Orbital;
      else
        bad(violations, key, "expected 'inertial' or 'orbital'");
    } else if (key == "dt") {
      if (!parse_doubles(tokens, 0, &cfg.dt, 1)) bad(violations, key, "expected a real");
    } else if (key == "duration") {
      if (!parse_doubles(tokens, 0, &cfg.duration, 1)) bad(violations, key, "expected a real");
    } else if (key == "output_every") {
      double v = 0;
      if (!parse_doubles(tokens, 0, &v, 1) || v != std::floor(v))
        bad(violations, key, "expected an integer");
      else
        cfg.output_every = static_cast<long>(v);
    } else {
      bad(violations, key, "unknown key");
    }
  }
  return cfg;
}

SimConfig load_config(const std::string& path, std::vector<ConfigViolation>& violations) {
  std::ifstream in(path);
  if (!in) {
    violations.push_back({"config", "cannot open '" + path + "'"});
    return {};
  }
  return parse_config(in, violations);
}

std::vector<ConfigViolation> validate(const SimConfig& cfg) {
  std::vector<ConfigViolation> v;

  Mat3 j;
  j(0, 0) = cfg.inertia[0];
  j(1, 1) = cfg.inertia[1];
  j(2, 2) = cfg.inertia[2];
  j(0, 1) = j(1, 0) = cfg.inertia[3];
  j(0, 2) = j(2, 0) = cfg.inertia[4];
  j(1, 2) = j(2, 1) = cfg.inertia[5];
  bool finite = true;
  for (double x : cfg.inertia) finite = finite && std::isfinite(x);
  if (!finite) {
    bad(v, "inertia", "non-finite entries");
  } else {
    try {
      InertiaMatrix check(j);
    } catch (const std::domain_error& e) {
      bad(v, "inertia", e.what());
    }
  }

  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt))
    bad(v, "dt", "must be a finite positive real");
  if (!(cfg.duration > 0.0) || !std::isfinite(cfg.duration))
    bad(v, "duration", "must be a finite positive real");
  if (std::isfinite(cfg.dt) && std::isfinite(cfg.duration) && cfg.dt > cfg.duration)
    bad(v, "dt", "must not exceed duration");
  if (cfg.output_every < 1) bad(v, "output_every", "must be >= 1");

  if (cfg.attitude_input == AttitudeInput::Quaternion) {
    const double n = norm(cfg.q0);
    if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-3)
      bad(v, "q0", "norm must be within 1e-3 of 1 (non-normalizable input rejected)");
  } else {
    if (!std::isfinite(cfg.euler0.phi) || !std::isfinite(cfg.euler0.theta) ||
        !std::isfinite(cfg.euler0.psi))
      bad(v, "attitude_input", "non-finite euler angles");
  }

  if (!is_finite(cfg.omega0)) bad(v, "omega0", "non-finite entries");
  if (cfg.torque_kind == TorqueKind::Constant && !is_finite(cfg.torque_constant))
    bad(v, "torque", "non-finite constant torque");
  if (cfg.torque_kind == TorqueKind::Schedule) {
    for (const auto& [t, torque] : cfg.torque_schedule)
      if (!std::isfinite(t) || !is_finite(torque)) {
        bad(v, "torque", "non-finite schedule entry");
        break;
      }
  }
  if (cfg.frame == FrameKind::Orbital && !is_finite(cfg.omega_o))
    bad(v, "omega_o", "non-finite entries");

  return v;
}

namespace {

InertiaMatrix inertia_from_config(const SimConfig& cfg) {
  Mat3 j;
  j(0, 0) = cfg.inertia[0];
  j(1, 1) = cfg.inertia[1];
  j(2, 2) = cfg.inertia[2];
  j(0, 1) = j(1, 0) = cfg.inertia[3];
  j(0, 2) = j(2, 0) = cfg.inertia[4];
  j(1, 2) = j(2, 1) = cfg.inertia[5];
  return InertiaMatrix(j);
}

TorqueProfile torque_from_config(const SimConfig& cfg) {
  switch (cfg.torque_kind) {
    case TorqueKind::Zero: return zero_torque();
    case TorqueKind::Constant: return constant_torque(cfg.torque_constant);
    case TorqueKind::Schedule: return schedule_torque(cfg.torque_schedule);
  }
  return zero_torque();
}

TrajectoryRecord make_record(const SimConfig& cfg, const InertiaMatrix& inertia,
                             double t, const BodyState& state) {
  const Mat3 r = rotation_matrix(state.q);
  Vec3 w = state.omega_body;
  if (cfg.frame == FrameKind::Orbital)
    w = omega_inertial_from_orbital(r, cfg.omega_o, state.omega_body);
  TrajectoryRecord rec;
  rec.t = t;
  rec.q = state.q.as_vec4();
  rec.w = w;
  rec.energy = kinetic_energy(inertia, w);
  rec.angular_momentum = r * (inertia.matrix() * w);
  return rec;
}

}  // namespace

SimResult run(const SimConfig& cfg) {
  const InertiaMatrix inertia = inertia_from_config(cfg);
  const TorqueProfile torque = torque_from_config(cfg);

  BodyState state;
  state.q = cfg.attitude_input == AttitudeInput::Euler
                ? euler_to_quat(cfg.euler0)
                : normalize(Quaternion(cfg.q0));
  state.omega_body = cfg.omega0;

  const long n_steps = static_cast<long>(std::floor(cfg.duration / cfg.dt + 1e-9));

  SimResult result;
  result.trajectory.push_back(make_record(cfg, inertia, 0.0, state));

  const double e0 = result.trajectory.front().energy;
  const Vec3 l0 = result.trajectory.front().angular_momentum;

  for (long i = 1; i <= n_steps; ++i) {
    const double t_prev = (i - 1) * cfg.dt;
    double drift = 0.0;
    state = rk4_step(inertia, state, torque, t_prev, cfg.dt, &drift);
    result.summary.max_norm_drift = std::max(result.summary.max_norm_drift, drift);

    const double t = i * cfg.dt;
    if (!std::isfinite(state.q.q0) || !is_finite(state.q.qv) ||
        !is_finite(state.omega_body)) {
      throw std::domain_error("non-finite state at t=" + std::to_string(t));
    }

    if (i % cfg.output_every == 0) {
      const auto rec = make_record(cfg, inertia, t, state);
      result.summary.energy_drift_rel =
          std::max(result.summary.energy_drift_rel,
                   std::abs(rec.energy - e0) / std::max(std::abs(e0), 1e-300));
      for (int c = 0; c < 3; ++c)
        result.summary.momentum_drift_max =
            std::max(result.summary.momentum_drift_max,
                     std::abs(rec.angular_momentum[c] - l0[c]));
      result.trajectory.push_back(rec);
    }
  }

  result.summary.steps = n_steps;
  result.summary.rows = static_cast<long>(result.trajectory.size());
  return result;
}

void write_csv(std::ostream& out, const std::vector<TrajectoryRecord>& rows) {
  out << "t,q0,q1,q2,q3,w1,w2,w3,energy,Lx,Ly,Lz\n";
  char buf[64];
  auto emit = [&](double v, char tail) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf << tail;
  };
  for (const auto& r : rows) {
    emit(r.t, ',');
    for (int i = 0; i < 4; ++i) emit(r.q[i], ',');
    for (int i = 0; i < 3; ++i) emit(r.w[i], ',');
    emit(r.energy, ',');
    emit(r.angular_momentum.x, ',');
    emit(r.angular_momentum.y, ',');
    emit(r.angular_momentum.z, '\n');
  }
}

void write_summary(std::ostream& out, const SimSummary& s) {
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  out << "steps = " << s.steps << "\n"
      << "rows = " << s.rows << "\n"
      << "max_norm_drift = " << fmt(s.max_norm_drift) << "\n"
      << "energy_drift_rel = " << fmt(s.energy_drift_rel) << "\n"
      << "momentum_drift_max = " << fmt(s.momentum_drift_max) << "\n";
}

}  // namespace quatdyn
