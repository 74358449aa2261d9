#pragma once

#include <optional>
#include <vector>

#include "quatdyn/kinematics.hpp"

namespace quatdyn {

/// One link in a frame chain: the attitude of frame i+1 relative to frame i,
/// with an optional angular velocity of that link expressed in frame i+1
/// (the child frame; callers using another convention must convert first).
struct FrameLink {
  Quaternion attitude;
  std::optional<Vec3> omega_child;
};

using FrameChain = std::vector<FrameLink>;

/// Chained attitude q02 = q01 o q12, renormalized. Throws for non-unit inputs.
Quaternion compose_attitude(const Quaternion& q01, const Quaternion& q12);

/// Angular velocity addition across two links, expressed in the innermost
/// frame: w02 (in frame 2) = rotate_to_body(q12, w01 in frame 1) + w12 (in
/// frame 2). Throws for non-unit q12.
Vec3 compose_omega_body(const Quaternion& q12, Vec3 omega01_in_frame1,
                        Vec3 omega12_in_frame2);

/// Fold a whole chain: total attitude and, when every link carries a rate,
/// the total angular velocity in the last frame.
Quaternion chain_attitude(const FrameChain& chain);
std::optional<Vec3> chain_omega_body(const FrameChain& chain);

/// Body rate for the inertial formulation, built from a non-inertial (e.g.
/// orbital) formulation: R^T w_o + w'_noninertial. This is the rate to feed
/// to kinetic_energy in the non-inertial model. Throws std::domain_error if
/// R is farther than 1e-6 from orthogonal.
Vec3 omega_inertial_from_orbital(const Mat3& r_noninertial, Vec3 omega_o,
                                 Vec3 omega_body_noninertial);

}  // namespace quatdyn
