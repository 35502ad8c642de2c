#pragma once

#include <vector>

#include "gsc/stability.hpp"
#include "gsc/telemetry.hpp"

namespace gsc {

/// One recorded inequality violation.
struct MonitorViolation {
  double t = 0.0;
  double residual = 0.0;  // amount by which the inequality failed
};

/// Lyapunov-certificate checks evaluated over a recording. Violations are
/// collected, never thrown: the certificates assume exact arithmetic and
/// zero disturbance while the recording carries integration error.
struct MonitorReport {
  size_t samples = 0;

  // Strict decrease of the surface Lyapunov value. Samples whose value has
  // already collapsed onto the numerical floor count as satisfied.
  size_t decrease_ok = 0;
  double decrease_fraction = 0.0;

  // Discrete-derivative bound dV/dt <= -eta z_R^T W3 z_R.
  std::vector<MonitorViolation> rate_violations;

  // Sandwich z_R^T W1 z_R <= V <= z_R^T W2 z_R.
  std::vector<MonitorViolation> sandwich_violations;

  // Scalar-error envelope psi <= min{2, mu exp(-tau t)}.
  std::vector<MonitorViolation> envelope_violations;
  double psi_a = 0.0;  // trajectory bound inferred from the initial sample
  double mu = 0.0;
  double tau = 0.0;

  // Position mode only: dV_g/dt <= -z^T Pi5 z and the tilt-cosine bound
  // (Rcmd e3).(R e3) >= 1 - psi_one.
  std::vector<MonitorViolation> full_rate_violations;
  std::vector<MonitorViolation> cosine_violations;
};

/// Attitude-mode monitors over rows [begin, end) of the recording
/// (end == 0 means the whole recording).
MonitorReport attitude_monitors(const Telemetry& telemetry,
                                const AttitudeGains& gains, ErrorSet set,
                                size_t begin = 0, size_t end = 0);

/// Position-mode monitors; additionally checks the complete-system rate
/// bound built from the acceleration bound B at the given theta (theta <= 0
/// selects 0.99 of the variant maximum).
MonitorReport position_monitors(const Telemetry& telemetry,
                                const PositionGains& gains, ErrorSet set,
                                double mass, double B, double theta = 0.0,
                                size_t begin = 0, size_t end = 0);

}  // namespace gsc
