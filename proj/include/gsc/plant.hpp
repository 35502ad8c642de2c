#pragma once

#include <array>

#include "gsc/types.hpp"

namespace gsc {

/// Physical parameters of the vehicle. Defaults are those of the small
/// research quadrotor used throughout the bundled scenarios.
struct QuadParams {
  Mat3 inertia = (Mat3() << 0.0181, 0, 0,
                            0, 0.0196, 0,
                            0, 0, 0.0273).finished();  // kg m^2, body frame
  double mass = 1.225;       // kg
  double arm = 0.23;         // m, motor axis offset from the CM
  double torque_coeff = 0.0121;  // m, propeller drag torque per unit thrust
  double gravity = 9.81;     // m/s^2
  double f_min = 0.0;        // N, per-motor thrust floor
  double f_max = 6.9939;     // N, per-motor thrust ceiling

  double hover_thrust() const { return mass * gravity; }
};

/// Rigid-body state: inertial position/velocity, attitude (body->inertial),
/// and body-frame angular velocity.
struct RigidBodyState {
  Vec3 position = Vec3::Zero();          // m
  Vec3 velocity = Vec3::Zero();          // m/s
  Mat3 attitude = Mat3::Identity();      // rotation matrix
  Vec3 angular_velocity = Vec3::Zero();  // rad/s, body frame
};

/// Total thrust along the body z axis plus body-frame moment.
struct Wrench {
  double thrust = 0.0;       // N
  Vec3 moment = Vec3::Zero();  // N m
};

/// External disturbance: inertial-frame force and body-frame torque.
struct Disturbance {
  Vec3 force = Vec3::Zero();   // N, inertial
  Vec3 torque = Vec3::Zero();  // N m, body
};

/// Per-motor thrusts after allocation, with clamp flags per motor.
struct MotorThrusts {
  Vec4 f = Vec4::Zero();
  std::array<bool, 4> clamped = {false, false, false, false};
  bool any_clamped() const {
    return clamped[0] || clamped[1] || clamped[2] || clamped[3];
  }
};

/// 4x4 map from per-motor thrusts to (total thrust; body moment).
Mat4 mixer_matrix(double arm, double torque_coeff);

/// Forward map: per-motor thrusts -> achieved wrench.
Wrench wrench_of(const Vec4& motor_thrusts, double arm, double torque_coeff);

/// Inverse map: commanded wrench -> per-motor thrusts (exact; the mixer is
/// invertible for positive arm and torque coefficient).
Vec4 allocate(const Wrench& command, double arm, double torque_coeff);

/// Clamp each motor thrust to [f_min, f_max] and flag the clamped motors.
MotorThrusts saturate(const Vec4& motor_thrusts, double f_min, double f_max);

/// Time derivative of the state under a given wrench and disturbance.
struct StateDerivative {
  Vec3 velocity;
  Vec3 acceleration;
  Mat3 attitude_rate;
  Vec3 angular_acceleration;
};
StateDerivative derivative(const RigidBodyState& state, const Wrench& wrench,
                           const Disturbance& dist, const QuadParams& p);

/// One fixed step: classical RK4 on (position, velocity, angular velocity)
/// with the wrench held constant, and the attitude advanced by the
/// exponential of the RK4-averaged body rate. The attitude is re-projected
/// onto SO(3) only if its orthonormality residual exceeds 1e-10.
RigidBodyState advance(const RigidBodyState& state, const Wrench& wrench,
                       const Disturbance& dist, const QuadParams& p,
                       double dt);

}  // namespace gsc
