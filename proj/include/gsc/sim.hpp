#pragma once

#include <optional>
#include <string>

#include "gsc/control.hpp"
#include "gsc/plant.hpp"
#include "gsc/reference.hpp"
#include "gsc/telemetry.hpp"
#include "gsc/wind.hpp"

namespace gsc {

enum class ControllerKind { Surface, PdBenchmark };

struct SimOptions {
  QuadParams params;
  AttitudeGains attitude_gains;   // drives attitude-mode phases
  PositionGains position_gains;   // drives position-mode phases
  ErrorSet set = ErrorSet::One;
  double dt = 1e-3;
  bool saturation_enabled = false;
  std::optional<WindModel> wind;
  ControllerKind controller = ControllerKind::Surface;
  PdGains pd_gains;
  /// Total thrust held during attitude-mode phases; negative selects the
  /// hover-equivalent m*g.
  double acm_thrust = -1.0;
  /// Central-difference step for the induced-attitude rates.
  double fd_step = 1e-4;
};

struct SimResult {
  Telemetry telemetry;
  bool completed = false;
  double failure_time = 0.0;       // valid when !completed
  std::string failure_reason;
  RigidBodyState final_state;
  int saturated_steps = 0;
};

/// Run a scenario with zero-order-hold control at fixed step dt. Telemetry
/// has one row per control step plus the terminal sample. Controller
/// errors (degenerate thrust, antipodal attitude, parallel heading) stop
/// the run and are reported with their time rather than rethrown.
SimResult simulate(const FlightScenario& scenario, const SimOptions& opt);

}  // namespace gsc
