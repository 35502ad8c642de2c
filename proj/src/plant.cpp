#include "gsc/plant.hpp"

#include <algorithm>

#include "gsc/so3.hpp"

namespace gsc {

Mat4 mixer_matrix(double arm, double torque_coeff) {
  Mat4 m;
  m << 1, 1, 1, 1,
       0, arm, 0, -arm,
       -arm, 0, arm, 0,
       -torque_coeff, torque_coeff, -torque_coeff, torque_coeff;
  return m;
}

Wrench wrench_of(const Vec4& motor_thrusts, double arm, double torque_coeff) {
  const Vec4 w = mixer_matrix(arm, torque_coeff) * motor_thrusts;
  return Wrench{w(0), Vec3(w(1), w(2), w(3))};
}

Vec4 allocate(const Wrench& command, double arm, double torque_coeff) {
  // Closed-form inverse of the mixer: split into the two opposite motor
  // pairs, whose sums are fixed by total thrust and yaw torque.
  const double f = command.thrust;
  const Vec3& u = command.moment;
  const double pair_13 = (f - u.z() / torque_coeff) / 2.0;  // f1 + f3
  const double pair_24 = (f + u.z() / torque_coeff) / 2.0;  // f2 + f4
  Vec4 thrusts;
  thrusts(0) = (pair_13 - u.y() / arm) / 2.0;
  thrusts(2) = (pair_13 + u.y() / arm) / 2.0;
  thrusts(1) = (pair_24 + u.x() / arm) / 2.0;
  thrusts(3) = (pair_24 - u.x() / arm) / 2.0;
  return thrusts;
}

MotorThrusts saturate(const Vec4& motor_thrusts, double f_min, double f_max) {
  MotorThrusts out;
  for (int i = 0; i < 4; ++i) {
    const double fi = motor_thrusts(i);
    out.f(i) = std::clamp(fi, f_min, f_max);
    out.clamped[i] = fi < f_min || fi > f_max;
  }
  return out;
}

StateDerivative derivative(const RigidBodyState& state, const Wrench& wrench,
                           const Disturbance& dist, const QuadParams& p) {
  StateDerivative d;
  d.velocity = state.velocity;
  d.acceleration =
      (-p.mass * p.gravity * Vec3::UnitZ() +
       wrench.thrust * state.attitude.col(2) + dist.force) /
      p.mass;
  d.attitude_rate = state.attitude * hat(state.angular_velocity);
  const Vec3 jw = p.inertia * state.angular_velocity;
  d.angular_acceleration = p.inertia.ldlt().solve(
      wrench.moment - state.angular_velocity.cross(jw) + dist.torque);
  return d;
}

namespace {

struct Stage {
  Vec3 x, v, w;
  Mat3 r;
};

StateDerivative eval(const Stage& s, const Wrench& wrench,
                     const Disturbance& dist, const QuadParams& p) {
  RigidBodyState st;
  st.position = s.x;
  st.velocity = s.v;
  st.attitude = s.r;
  st.angular_velocity = s.w;
  return derivative(st, wrench, dist, p);
}

}  // namespace

RigidBodyState advance(const RigidBodyState& state, const Wrench& wrench,
                       const Disturbance& dist, const QuadParams& p,
                       double dt) {
  // Stage attitudes are propagated linearly (R + tau * R_dot); only the
  // final update goes through the exponential so the attitude stays on
  // SO(3) regardless of step count.
  const Stage s1{state.position, state.velocity, state.angular_velocity,
                 state.attitude};
  const StateDerivative k1 = eval(s1, wrench, dist, p);

  const Stage s2{state.position + 0.5 * dt * k1.velocity,
                 state.velocity + 0.5 * dt * k1.acceleration,
                 state.angular_velocity + 0.5 * dt * k1.angular_acceleration,
                 state.attitude + 0.5 * dt * k1.attitude_rate};
  const StateDerivative k2 = eval(s2, wrench, dist, p);

  const Stage s3{state.position + 0.5 * dt * k2.velocity,
                 state.velocity + 0.5 * dt * k2.acceleration,
                 state.angular_velocity + 0.5 * dt * k2.angular_acceleration,
                 state.attitude + 0.5 * dt * k2.attitude_rate};
  const StateDerivative k3 = eval(s3, wrench, dist, p);

  const Stage s4{state.position + dt * k3.velocity,
                 state.velocity + dt * k3.acceleration,
                 state.angular_velocity + dt * k3.angular_acceleration,
                 state.attitude + dt * k3.attitude_rate};
  const StateDerivative k4 = eval(s4, wrench, dist, p);

  RigidBodyState next;
  next.position = state.position + dt / 6.0 *
      (k1.velocity + 2 * k2.velocity + 2 * k3.velocity + k4.velocity);
  next.velocity = state.velocity + dt / 6.0 *
      (k1.acceleration + 2 * k2.acceleration + 2 * k3.acceleration +
       k4.acceleration);
  next.angular_velocity = state.angular_velocity + dt / 6.0 *
      (k1.angular_acceleration + 2 * k2.angular_acceleration +
       2 * k3.angular_acceleration + k4.angular_acceleration);

  const Vec3 w_avg = (s1.w + 2 * s2.w + 2 * s3.w + s4.w) / 6.0;
  next.attitude = state.attitude * exp_so3(Vec3(w_avg * dt));
  if (orthonormality_residual(next.attitude) > 1e-10) {
    next.attitude = project_so3(next.attitude);
  }
  return next;
}

}  // namespace gsc
