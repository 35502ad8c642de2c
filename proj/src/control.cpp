#include "gsc/control.hpp"

#include <cmath>

#include "gsc/errors.hpp"
#include "gsc/so3.hpp"

namespace gsc {

namespace {

constexpr double kThrustAxisFloor = 1e-6;  // N
constexpr double kHeadingFloor = 1e-6;

// Shared core of both modes: the surface moment law against an arbitrary
// attitude command.
Vec3 surface_moment(const Mat3& inertia, const AttitudeGains& g,
                    ErrorSet set, const RigidBodyState& state,
                    const AttitudeRef& ref) {
  const Mat3& r = state.attitude;
  const Vec3& w = state.angular_velocity;
  const Vec3 e_R = attitude_error_vector(r, ref.rotation, set);
  const Vec3 e_w = angular_velocity_error(r, w, ref.rotation, ref.rate);
  const Mat3 e_mat = transport_matrix(r, ref.rotation, set);
  const Vec3 e_R_dot = e_mat * e_w;
  const Vec3 a_d =
      tracking_feedforward(r, w, ref.rotation, ref.rate, ref.rate_dot);
  const Vec3 s_R = attitude_surface(e_R, e_w, g);
  return w.cross(Vec3(inertia * w)) -
         inertia * Vec3(g.k_R / g.k_omega * e_R_dot + a_d + g.eta * s_R);
}

void fill_attitude_diagnostics(ControlEval& eval, const RigidBodyState& state,
                               const AttitudeRef& ref,
                               const AttitudeGains& g, ErrorSet set) {
  eval.attitude_cmd = ref.rotation;
  eval.psi = attitude_error_value(state.attitude, ref.rotation, set);
  eval.e_R = attitude_error_vector(state.attitude, ref.rotation, set);
  eval.e_omega = angular_velocity_error(state.attitude,
                                        state.angular_velocity, ref.rotation,
                                        ref.rate);
  eval.s_R = attitude_surface(eval.e_R, eval.e_omega, g);
}

}  // namespace

Vec3 thrust_command_vector(const Vec3& e_x, const Vec3& e_v,
                           const Vec3& acc_d, const PositionGains& g,
                           double mass, double gravity) {
  const Vec3 s_x = position_surface(e_x, e_v, g);
  return mass * gravity * Vec3::UnitZ() - mass * (g.k_x / g.k_v) * e_v -
         g.a * s_x + mass * acc_d;
}

Vec3 desired_thrust_axis(const Vec3& e_x, const Vec3& e_v, const Vec3& acc_d,
                         const PositionGains& g, double mass,
                         double gravity) {
  const Vec3 u = thrust_command_vector(e_x, e_v, acc_d, g, mass, gravity);
  const double n = u.norm();
  if (n <= kThrustAxisFloor) {
    throw DegenerateThrustError(
        "desired thrust direction undefined: net specific-force command "
        "is zero");
  }
  return u / n;
}

Mat3 position_induced_attitude(const Vec3& thrust_axis,
                               const Vec3& heading) {
  const Vec3 cross = thrust_axis.cross(heading);
  if (cross.norm() <= kHeadingFloor) {
    throw ParallelHeadingError(
        "heading direction parallel to the commanded thrust axis");
  }
  const Vec3 e1h = cross.cross(thrust_axis).normalized();
  const Vec3 e2h = thrust_axis.cross(e1h).normalized();
  Mat3 r;
  r.col(0) = e1h;
  r.col(1) = e2h;
  r.col(2) = thrust_axis;
  return r;
}

AttitudeController::AttitudeController(const Mat3& inertia,
                                       const AttitudeGains& gains,
                                       ErrorSet set)
    : inertia_(inertia), gains_(gains), set_(set) {
  if (!gains.positive()) {
    throw GainError("attitude gains must be positive");
  }
  if (!gains.condition_ok()) {
    throw GainError("attitude gain condition violated: requires "
                    "eta > k_R / k_omega^2");
  }
}

Vec3 AttitudeController::moment(const RigidBodyState& state,
                                const AttitudeRef& ref) const {
  return surface_moment(inertia_, gains_, set_, state, ref);
}

ControlEval AttitudeController::evaluate(const RigidBodyState& state,
                                         const AttitudeRef& ref) const {
  ControlEval eval;
  eval.wrench.moment = moment(state, ref);
  fill_attitude_diagnostics(eval, state, ref, gains_, set_);
  return eval;
}

PositionController::PositionController(const QuadParams& params,
                                       const PositionGains& gains,
                                       ErrorSet set, double fd_step)
    : params_(params), gains_(gains), set_(set), fd_step_(fd_step) {
  if (!gains.positive()) {
    throw GainError("position gains must be positive");
  }
  if (!gains.attitude.condition_ok()) {
    throw GainError("attitude gain condition violated: requires "
                    "eta > k_R / k_omega^2");
  }
  if (fd_step <= 0) {
    throw GainError("finite-difference step must be positive");
  }
}

namespace {

struct ErrorPair {
  Vec3 e_x;
  Vec3 e_v;
};

// Unforced closed-loop translational error dynamics used to predict the
// tracking errors a short interval away:
//   e_x' = e_v,   e_v' = -(k_x/k_v) e_v - (a/m) s_x.
// This drops the thrust-misalignment forcing term, which is what makes the
// prediction (and hence the differentiated attitude command) approximate.
ErrorPair predict_errors(const ErrorPair& e0, const PositionGains& g,
                         double mass, double h) {
  const auto rate = [&](const ErrorPair& e) {
    const Vec3 s_x = position_surface(e.e_x, e.e_v, g);
    return ErrorPair{e.e_v, -(g.k_x / g.k_v) * e.e_v - (g.a / mass) * s_x};
  };
  const ErrorPair k1 = rate(e0);
  const ErrorPair k2 = rate({e0.e_x + 0.5 * h * k1.e_x,
                             e0.e_v + 0.5 * h * k1.e_v});
  const ErrorPair k3 = rate({e0.e_x + 0.5 * h * k2.e_x,
                             e0.e_v + 0.5 * h * k2.e_v});
  const ErrorPair k4 = rate({e0.e_x + h * k3.e_x, e0.e_v + h * k3.e_v});
  return {e0.e_x + h / 6.0 * (k1.e_x + 2 * k2.e_x + 2 * k3.e_x + k4.e_x),
          e0.e_v + h / 6.0 * (k1.e_v + 2 * k2.e_v + 2 * k3.e_v + k4.e_v)};
}

}  // namespace

PositionInducedAttitude PositionController::induced_attitude(
    const RigidBodyState& state, const PositionRefFn& ref, double t) const {
  const double h = fd_step_;
  const PositionRef now = ref(t);
  const ErrorPair e_now{state.position - now.position,
                        state.velocity - now.velocity};

  const auto attitude_at = [&](const ErrorPair& e, const PositionRef& r) {
    const Vec3 axis = desired_thrust_axis(e.e_x, e.e_v, r.acceleration,
                                          gains_, params_.mass,
                                          params_.gravity);
    return position_induced_attitude(axis, r.heading);
  };

  const Mat3 r0 = attitude_at(e_now, now);
  const Mat3 rp = attitude_at(predict_errors(e_now, gains_, params_.mass, h),
                              ref(t + h));
  const Mat3 rm = attitude_at(predict_errors(e_now, gains_, params_.mass, -h),
                              ref(t - h));

  // First and second central differences of the command rotation; the body
  // rate and its slope come out of the antisymmetric parts of R^T R_dot and
  // R^T R_ddot (the symmetric hat(w)^2 term cancels in the latter).
  const Mat3 r_dot = (rp - rm) / (2.0 * h);
  const Mat3 r_ddot = (rp - 2.0 * r0 + rm) / (h * h);
  const auto antisym_vee = [](const Mat3& m) {
    const Mat3 a = (m - m.transpose()) / 2.0;
    return Vec3(a(2, 1), a(0, 2), a(1, 0));
  };

  PositionInducedAttitude out;
  out.rotation = r0;
  out.rate = antisym_vee(r0.transpose() * r_dot);
  out.rate_dot = antisym_vee(r0.transpose() * r_ddot);
  return out;
}

ControlEval PositionController::evaluate(const RigidBodyState& state,
                                         const PositionRefFn& ref,
                                         double t) const {
  const PositionRef now = ref(t);
  const Vec3 e_x = state.position - now.position;
  const Vec3 e_v = state.velocity - now.velocity;
  const Vec3 u_vec = thrust_command_vector(e_x, e_v, now.acceleration, gains_,
                                           params_.mass, params_.gravity);

  const PositionInducedAttitude cmd = induced_attitude(state, ref, t);
  const AttitudeRef att_ref{cmd.rotation, cmd.rate, cmd.rate_dot};

  ControlEval eval;
  eval.wrench.thrust = u_vec.dot(state.attitude.col(2));
  eval.wrench.moment =
      surface_moment(params_.inertia, gains_.attitude, set_, state, att_ref);
  fill_attitude_diagnostics(eval, state, att_ref, gains_.attitude, set_);
  eval.e_x = e_x;
  eval.e_v = e_v;
  eval.s_x = position_surface(e_x, e_v, gains_);
  return eval;
}

BenchmarkPdController::BenchmarkPdController(const QuadParams& params,
                                             const PdGains& gains)
    : params_(params), gains_(gains) {}

ControlEval BenchmarkPdController::evaluate_attitude(
    const RigidBodyState& state, const AttitudeRef& ref) const {
  const Vec3 e_R =
      attitude_error_vector(state.attitude, ref.rotation, ErrorSet::One);
  const Vec3 e_w = angular_velocity_error(
      state.attitude, state.angular_velocity, ref.rotation, ref.rate);
  ControlEval eval;
  eval.wrench.moment =
      -gains_.kp_att * e_R - gains_.kd_att * e_w +
      state.angular_velocity.cross(
          Vec3(params_.inertia * state.angular_velocity));
  eval.attitude_cmd = ref.rotation;
  eval.psi = attitude_error_value(state.attitude, ref.rotation,
                                  ErrorSet::One);
  eval.e_R = e_R;
  eval.e_omega = e_w;
  return eval;
}

ControlEval BenchmarkPdController::evaluate_position(
    const RigidBodyState& state, const PositionRefFn& ref, double t) const {
  const PositionRef now = ref(t);
  const Vec3 e_x = state.position - now.position;
  const Vec3 e_v = state.velocity - now.velocity;
  const Vec3 force_cmd =
      params_.mass * (params_.gravity * Vec3::UnitZ() + now.acceleration -
                      gains_.kp_pos * e_x - gains_.kd_pos * e_v);
  const double n = force_cmd.norm();
  if (n <= 1e-6) {
    throw DegenerateThrustError("pd benchmark: zero net force command");
  }
  const Mat3 r_cmd = position_induced_attitude(force_cmd / n, now.heading);

  ControlEval eval =
      evaluate_attitude(state, AttitudeRef{r_cmd, Vec3::Zero(), Vec3::Zero()});
  eval.wrench.thrust = force_cmd.dot(state.attitude.col(2));
  eval.e_x = e_x;
  eval.e_v = e_v;
  return eval;
}

}  // namespace gsc
