#pragma once

#include <array>
#include <vector>

#include "gsc/types.hpp"

namespace gsc {

/// One recorded control step. Norm columns refer to the active mode's
/// tracking errors (attitude errors are taken against the active attitude
/// command; position errors are zero in attitude mode).
struct TelemetryRow {
  double t = 0.0;
  int mode = 0;  // 0 attitude, 1 position
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  Mat3 attitude = Mat3::Identity();
  Vec3 angular_velocity = Vec3::Zero();
  double psi = 0.0;       // scalar attitude error of the configured set
  double psi_one = 0.0;   // trace-based scalar attitude error
  double e_R_norm = 0.0;
  double e_omega_norm = 0.0;
  double e_x_norm = 0.0;
  double e_v_norm = 0.0;
  double s_R_norm = 0.0;
  double s_x_norm = 0.0;
  double cos_tilt = 1.0;  // (Rcmd e3) . (R e3)
  double thrust = 0.0;    // achieved total thrust [N]
  Vec3 moment = Vec3::Zero();  // achieved body moment [N m]
  Vec4 motor_thrusts = Vec4::Zero();  // after clamping [N]
  std::array<bool, 4> clamped = {false, false, false, false};
  double lyap_v = 0.0;
  double lyap_v_psi = 0.0;
  double lyap_v_x = 0.0;
  double lyap_v_g = 0.0;
};

/// Uniform-grid recording of one run.
struct Telemetry {
  double dt = 1e-3;
  std::vector<TelemetryRow> rows;

  size_t size() const { return rows.size(); }
  bool empty() const { return rows.empty(); }
  double t_start() const { return rows.empty() ? 0.0 : rows.front().t; }
  double t_end() const { return rows.empty() ? 0.0 : rows.back().t; }
  bool same_grid(const Telemetry& other) const {
    return dt == other.dt && size() == other.size() &&
           (empty() || (rows.front().t == other.rows.front().t));
  }
};

}  // namespace gsc
