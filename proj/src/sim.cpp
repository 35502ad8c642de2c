#include "gsc/sim.hpp"

#include <cmath>

#include "gsc/errors.hpp"

namespace gsc {

namespace {

struct ActiveRefs {
  FlightMode mode = FlightMode::Position;
  AttitudeRefFn attitude;
  PositionRefFn position;
};

class Runner {
 public:
  Runner(const FlightScenario& scenario, const SimOptions& opt)
      : scenario_(scenario),
        opt_(opt),
        attitude_ctrl_(opt.params.inertia, opt.attitude_gains, opt.set),
        position_ctrl_(opt.params, opt.position_gains, opt.set,
                       opt.fd_step),
        pd_ctrl_(opt.params, opt.pd_gains) {}

  SimResult run() {
    SimResult result;
    result.telemetry.dt = opt_.dt;
    RigidBodyState state = scenario_.initial_state;
    const double dt = opt_.dt;
    long step = 0;  // global step index; t = step * dt

    try {
      for (const Phase& phase : scenario_.phases) {
        const double t_enter = step * dt;
        refs_ = make_refs(phase, state, t_enter);
        while (step * dt < phase.t_end - dt / 2.0) {
          const double t = step * dt;
          const StepRecord rec = control_step(state, t);
          result.telemetry.rows.push_back(rec.row);
          if (rec.row.clamped[0] || rec.row.clamped[1] ||
              rec.row.clamped[2] || rec.row.clamped[3]) {
            ++result.saturated_steps;
          }
          const Disturbance dist =
              opt_.wind ? wind_disturbance(state, *opt_.wind, t)
                        : Disturbance{};
          state = advance(state, rec.achieved, dist, opt_.params, dt);
          ++step;
        }
      }
      // Terminal sample under the last phase's references.
      if (!scenario_.phases.empty()) {
        result.telemetry.rows.push_back(control_step(state, step * dt).row);
      }
      result.completed = true;
    } catch (const Error& err) {
      result.completed = false;
      result.failure_time = step * dt;
      result.failure_reason = err.what();
    }
    result.final_state = state;
    return result;
  }

 private:
  struct StepRecord {
    TelemetryRow row;
    Wrench achieved;
  };

  ActiveRefs make_refs(const Phase& phase, const RigidBodyState& state,
                       double t) const {
    ActiveRefs refs;
    refs.mode = phase.mode;
    if (phase.mode == FlightMode::Attitude) {
      refs.attitude = phase.make_attitude(state, t);
    } else {
      refs.position = phase.make_position(state, t);
    }
    return refs;
  }

  StepRecord control_step(const RigidBodyState& state, double t) const {
    ControlEval eval;
    if (refs_.mode == FlightMode::Attitude) {
      const AttitudeRef att = refs_.attitude(t);
      eval = opt_.controller == ControllerKind::Surface
                 ? attitude_ctrl_.evaluate(state, att)
                 : pd_ctrl_.evaluate_attitude(state, att);
      eval.wrench.thrust = opt_.acm_thrust < 0.0
                               ? opt_.params.hover_thrust()
                               : opt_.acm_thrust;
    } else {
      eval = opt_.controller == ControllerKind::Surface
                 ? position_ctrl_.evaluate(state, refs_.position, t)
                 : pd_ctrl_.evaluate_position(state, refs_.position, t);
    }

    const Vec4 commanded =
        allocate(eval.wrench, opt_.params.arm, opt_.params.torque_coeff);
    MotorThrusts motors;
    if (opt_.saturation_enabled) {
      motors = saturate(commanded, opt_.params.f_min, opt_.params.f_max);
    } else {
      motors.f = commanded;
    }
    const Wrench achieved =
        wrench_of(motors.f, opt_.params.arm, opt_.params.torque_coeff);

    StepRecord rec;
    rec.achieved = achieved;
    rec.row = make_row(state, eval, motors, achieved, t);
    return rec;
  }

  TelemetryRow make_row(const RigidBodyState& state, const ControlEval& eval,
                        const MotorThrusts& motors, const Wrench& achieved,
                        double t) const {
    TelemetryRow row;
    row.t = t;
    row.mode = refs_.mode == FlightMode::Attitude ? 0 : 1;
    row.position = state.position;
    row.velocity = state.velocity;
    row.attitude = state.attitude;
    row.angular_velocity = state.angular_velocity;
    row.psi = eval.psi;
    row.psi_one = attitude_error_value(state.attitude, eval.attitude_cmd,
                                       ErrorSet::One);
    row.e_R_norm = eval.e_R.norm();
    row.e_omega_norm = eval.e_omega.norm();
    row.e_x_norm = eval.e_x.norm();
    row.e_v_norm = eval.e_v.norm();
    row.s_R_norm = eval.s_R.norm();
    row.s_x_norm = eval.s_x.norm();
    row.cos_tilt = eval.attitude_cmd.col(2).dot(state.attitude.col(2));
    row.thrust = achieved.thrust;
    row.moment = achieved.moment;
    row.motor_thrusts = motors.f;
    row.clamped = motors.clamped;

    // Lyapunov monitor columns, evaluated with the active mode's gains.
    const AttitudeGains& ag = refs_.mode == FlightMode::Attitude
                                  ? opt_.attitude_gains
                                  : opt_.position_gains.attitude;
    row.lyap_v = eval.s_R.squaredNorm() / (2.0 * ag.k_omega) +
                 2.0 * ag.eta * ag.k_R * ag.k_omega * eval.psi;
    row.lyap_v_psi =
        0.5 * eval.e_omega.squaredNorm() + ag.eta * ag.k_R * eval.psi;
    if (refs_.mode == FlightMode::Position) {
      const PositionGains& pg = opt_.position_gains;
      row.lyap_v_x = opt_.params.mass / (2.0 * pg.k_v) *
                         eval.s_x.squaredNorm() +
                     pg.a * pg.k_x * pg.k_v * eval.e_x.squaredNorm();
    }
    row.lyap_v_g = row.lyap_v + row.lyap_v_x;
    return row;
  }

  const FlightScenario& scenario_;
  const SimOptions& opt_;
  AttitudeController attitude_ctrl_;
  PositionController position_ctrl_;
  BenchmarkPdController pd_ctrl_;
  ActiveRefs refs_;
};

}  // namespace

SimResult simulate(const FlightScenario& scenario, const SimOptions& opt) {
  Runner runner(scenario, opt);
  return runner.run();
}

}  // namespace gsc
