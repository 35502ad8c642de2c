#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gsc/control.hpp"
#include "gsc/plant.hpp"
#include "gsc/types.hpp"

namespace gsc {

/// Smooth degree-8 polynomial segment on [t0, t1] for one scalar channel.
///
/// The nine coefficients are pinned by the value and derivatives 1..4 at t0
/// and the value and derivatives 1..3 at t1. Ending one derivative short of
/// the start keeps the system square while guaranteeing C^3 handoffs, which
/// is what the downstream acceleration consumers need.
class Sp8 {
 public:
  /// Boundary state: value plus time derivatives 1..4. The 4th derivative
  /// of the end boundary is not imposed (see above) and is ignored.
  struct Boundary {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
    double d4 = 0.0;
  };

  /// Throws IllConditionedError when the solved polynomial fails to
  /// reproduce its boundary conditions within 1e-6.
  static Sp8 fit(const Boundary& start, const Boundary& end, double t0,
                 double t1);

  /// Value or an analytic derivative of any order. Evaluating outside
  /// [t0, t1] returns the smooth polynomial extension.
  double value(double t) const { return derivative(t, 0); }
  double derivative(double t, int order) const;

  double t0() const { return t0_; }
  double t1() const { return t1_; }

 private:
  double t0_ = 0.0;
  double t1_ = 1.0;
  // Coefficients in the normalized variable (t - t0) / (t1 - t0).
  Eigen::Matrix<double, 9, 1> coeffs_ = Eigen::Matrix<double, 9, 1>::Zero();
};

/// One smooth segment per axis.
struct Sp8Vec3 {
  Sp8 x, y, z;

  Vec3 value(double t) const {
    return Vec3(x.value(t), y.value(t), z.value(t));
  }
  Vec3 derivative(double t, int order) const {
    return Vec3(x.derivative(t, order), y.derivative(t, order),
                z.derivative(t, order));
  }
};

/// Rest-to-rest style fit between two (position, velocity, acceleration)
/// triples with zero jerk/snap boundaries.
Sp8Vec3 sp8_translation(const Vec3& p0, const Vec3& v0, const Vec3& a0,
                        const Vec3& p1, const Vec3& v1, const Vec3& a1,
                        double t0, double t1);

/// Attitude reference rotating about the body pitch axis by the profile
/// angle: R_d = exp(theta(t) hat(e2)), rate = theta_dot e2.
AttitudeRefFn pitch_profile_reference(const Sp8& pitch);

/// Constant point-to-point attitude command (zero rate).
AttitudeRefFn constant_attitude_reference(const Mat3& rotation);

/// Position reference following a per-axis polynomial with fixed heading.
PositionRefFn sp8_position_reference(const Sp8Vec3& traj,
                                     const Vec3& heading);

/// Constant position setpoint (step command) with fixed heading.
PositionRefFn constant_position_reference(const Vec3& target,
                                          const Vec3& heading);

enum class FlightMode { Attitude, Position };

/// One scenario phase. The reference factory receives the state and time at
/// phase entry so successive phases start from the vehicle's actual state
/// rather than a precomputed pose.
struct Phase {
  double t_end = 0.0;
  FlightMode mode = FlightMode::Position;
  std::function<AttitudeRefFn(const RigidBodyState&, double)> make_attitude;
  std::function<PositionRefFn(const RigidBodyState&, double)> make_position;
};

struct FlightScenario {
  std::string name;
  RigidBodyState initial_state;
  std::vector<Phase> phases;

  double horizon() const {
    return phases.empty() ? 0.0 : phases.back().t_end;
  }
};

/// Stationary setpoint at the initial position.
FlightScenario hover_scenario(const Vec3& position = Vec3(0, 0, 1));

/// 90-degree pitch step attitude command from rest.
FlightScenario step90_scenario(double horizon = 2.0);

/// Centimeter position step x_d = [1;1;1] cm from rest.
FlightScenario cmstep_scenario(double horizon = 10.0);

/// Four-phase recovery maneuver: climb, 180-degree pitch-over, step
/// recovery to level, translation back onto a setpoint. Phases hand off on
/// the simulated state.
FlightScenario aggressive_scenario();

/// Least upper bound used by the stability gate: max over a dense grid of
/// |m g E3 + m xdd_d(t)|, times a 1.01 safety factor.
double bound_B(const PositionRefFn& ref, double t0, double t1, double mass,
               double gravity, double dt = 1e-3);

}  // namespace gsc
