#pragma once

#include <functional>

#include "gsc/attitude_error.hpp"
#include "gsc/plant.hpp"
#include "gsc/types.hpp"

namespace gsc {

/// Gains of the attitude-mode surface controller. Valid gains are positive
/// and satisfy the surface condition eta > k_R / k_omega^2.
struct AttitudeGains {
  double k_R = 0.0;      // 1/s^2
  double k_omega = 0.0;  // 1/s
  double eta = 0.0;      // 1/s

  bool positive() const { return k_R > 0 && k_omega > 0 && eta > 0; }
  bool condition_ok() const {
    return positive() && eta > k_R / (k_omega * k_omega);
  }
};

/// Gains of the position-mode controller, including the attitude gains of
/// the embedded attitude loop.
struct PositionGains {
  double k_x = 0.0;  // 1/s^2
  double k_v = 0.0;  // 1/s
  double a = 0.0;    // kg/s, surface reaching gain
  AttitudeGains attitude;

  bool positive() const {
    return k_x > 0 && k_v > 0 && a > 0 && attitude.positive();
  }
};

/// Attitude reference sample: desired rotation, body rate, body rate slope.
struct AttitudeRef {
  Mat3 rotation = Mat3::Identity();
  Vec3 rate = Vec3::Zero();      // rad/s, in the desired body frame
  Vec3 rate_dot = Vec3::Zero();  // rad/s^2
};

/// Position reference sample plus the desired heading direction.
struct PositionRef {
  Vec3 position = Vec3::Zero();      // m
  Vec3 velocity = Vec3::Zero();      // m/s
  Vec3 acceleration = Vec3::Zero();  // m/s^2
  Vec3 heading = Vec3::UnitX();      // unit vector, not parallel to thrust
};

using AttitudeRefFn = std::function<AttitudeRef(double)>;
using PositionRefFn = std::function<PositionRef(double)>;

/// Attitude surface s_R = k_R e_R + k_omega e_omega.
inline Vec3 attitude_surface(const Vec3& e_R, const Vec3& e_omega,
                             const AttitudeGains& g) {
  return g.k_R * e_R + g.k_omega * e_omega;
}

/// Position surface s_x = k_x e_x + k_v e_v.
inline Vec3 position_surface(const Vec3& e_x, const Vec3& e_v,
                             const PositionGains& g) {
  return g.k_x * e_x + g.k_v * e_v;
}

/// Net specific-force command driving the thrust direction and magnitude:
/// m g E3 - m (k_x/k_v) e_v - a s_x + m xdd_d.
Vec3 thrust_command_vector(const Vec3& e_x, const Vec3& e_v,
                           const Vec3& acc_d, const PositionGains& g,
                           double mass, double gravity);

/// Unit thrust direction; throws DegenerateThrustError when the command
/// vector norm falls below 1e-6 N.
Vec3 desired_thrust_axis(const Vec3& e_x, const Vec3& e_v, const Vec3& acc_d,
                         const PositionGains& g, double mass, double gravity);

/// Attitude whose third column is the thrust axis and whose first column is
/// the heading projected into the plane normal to it. Throws
/// ParallelHeadingError when heading and thrust axis are (near) parallel.
Mat3 position_induced_attitude(const Vec3& thrust_axis, const Vec3& heading);

/// Position-induced attitude command with its body rate and rate slope.
struct PositionInducedAttitude {
  Mat3 rotation = Mat3::Identity();
  Vec3 rate = Vec3::Zero();
  Vec3 rate_dot = Vec3::Zero();
};

/// Full diagnostic output of one controller evaluation.
struct ControlEval {
  Wrench wrench;
  Mat3 attitude_cmd = Mat3::Identity();  // what the attitude loop tracked
  double psi = 0.0;
  Vec3 e_R = Vec3::Zero();
  Vec3 e_omega = Vec3::Zero();
  Vec3 s_R = Vec3::Zero();
  Vec3 e_x = Vec3::Zero();  // zero in attitude mode
  Vec3 e_v = Vec3::Zero();
  Vec3 s_x = Vec3::Zero();
};

/// Surface-based attitude tracking controller. Immutable after
/// construction; evaluation is a pure function of (state, reference).
class AttitudeController {
 public:
  /// Throws GainError unless the gains are positive and satisfy
  /// eta > k_R / k_omega^2.
  AttitudeController(const Mat3& inertia, const AttitudeGains& gains,
                     ErrorSet set);

  /// Body moment u = w x Jw - J((k_R/k_omega) E e_omega + a_d + eta s_R).
  Vec3 moment(const RigidBodyState& state, const AttitudeRef& ref) const;

  /// moment() plus all error diagnostics; thrust is left at zero for the
  /// caller's thrust policy.
  ControlEval evaluate(const RigidBodyState& state,
                       const AttitudeRef& ref) const;

  const AttitudeGains& gains() const { return gains_; }
  ErrorSet error_set() const { return set_; }

 private:
  Mat3 inertia_;
  AttitudeGains gains_;
  ErrorSet set_;
};

/// Position tracking controller: thrust projection along the current body
/// z axis plus the embedded attitude loop tracking the position-induced
/// attitude. Immutable after construction.
class PositionController {
 public:
  /// Throws GainError on non-positive gains or an invalid attitude tier.
  PositionController(const QuadParams& params, const PositionGains& gains,
                     ErrorSet set, double fd_step = 1e-4);

  /// The attitude command and its rates at time t, with the rates obtained
  /// by central differences of the induced attitude over fd_step. Future
  /// and past errors are predicted by the unforced closed-loop error
  /// dynamics (see implementation notes).
  PositionInducedAttitude induced_attitude(const RigidBodyState& state,
                                           const PositionRefFn& ref,
                                           double t) const;

  ControlEval evaluate(const RigidBodyState& state, const PositionRefFn& ref,
                       double t) const;

  const PositionGains& gains() const { return gains_; }
  ErrorSet error_set() const { return set_; }
  double fd_step() const { return fd_step_; }

 private:
  QuadParams params_;
  PositionGains gains_;
  ErrorSet set_;
  double fd_step_;
};

/// Plain PD tracking law exposing the same evaluation surface as the
/// developed controllers; serves as the pluggable benchmark slot.
struct PdGains {
  double kp_pos = 6.0;   // 1/s^2
  double kd_pos = 4.0;   // 1/s
  double kp_att = 8.0;   // N m per unit attitude error
  double kd_att = 2.0;   // N m s
};

class BenchmarkPdController {
 public:
  BenchmarkPdController(const QuadParams& params, const PdGains& gains);

  ControlEval evaluate_attitude(const RigidBodyState& state,
                                const AttitudeRef& ref) const;
  ControlEval evaluate_position(const RigidBodyState& state,
                                const PositionRefFn& ref, double t) const;

 private:
  QuadParams params_;
  PdGains gains_;
};

}  // namespace gsc
