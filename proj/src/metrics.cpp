#include "gsc/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "gsc/errors.hpp"

namespace gsc {

namespace {

double sum_sq(const TelemetryRow& row) {
  return row.motor_thrusts.squaredNorm();
}

}  // namespace

double f_rms(const Telemetry& telemetry, double t) {
  if (telemetry.size() < 2) {
    throw RangeError("f_rms: telemetry too short");
  }
  const double rel = t - telemetry.t_start();
  const double span = telemetry.t_end() - telemetry.t_start();
  if (rel <= 0.0 || rel > span + telemetry.dt / 2.0) {
    throw RangeError("f_rms: time outside the recorded span");
  }
  const size_t last =
      std::min(telemetry.size() - 1,
               static_cast<size_t>(std::llround(rel / telemetry.dt)));
  double integral = 0.0;
  for (size_t i = 1; i <= last; ++i) {
    integral += 0.5 * telemetry.dt *
                (sum_sq(telemetry.rows[i - 1]) + sum_sq(telemetry.rows[i]));
  }
  const double duration = last * telemetry.dt;
  return std::sqrt(integral / duration);
}

std::vector<double> f_rms_series(const Telemetry& telemetry) {
  std::vector<double> out;
  if (telemetry.size() < 2) return out;
  out.reserve(telemetry.size() - 1);
  double integral = 0.0;
  for (size_t i = 1; i < telemetry.size(); ++i) {
    integral += 0.5 * telemetry.dt *
                (sum_sq(telemetry.rows[i - 1]) + sum_sq(telemetry.rows[i]));
    out.push_back(std::sqrt(integral / (i * telemetry.dt)));
  }
  return out;
}

double delta_f_rms(const Telemetry& proposed, const Telemetry& benchmark,
                   double t) {
  if (!proposed.same_grid(benchmark)) {
    throw GridMismatchError("delta_f_rms: recordings on different grids");
  }
  return f_rms(proposed, t) - f_rms(benchmark, t);
}

std::optional<double> reaching_time(const std::vector<double>& norms,
                                    double dt, double eps, double debounce) {
  if (eps <= 0.0) {
    throw RangeError("reaching_time: eps must be positive");
  }
  const size_t window = static_cast<size_t>(std::ceil(debounce / dt));
  for (size_t i = 0; i < norms.size(); ++i) {
    if (norms[i] > eps) continue;
    bool held = true;
    const size_t end = std::min(norms.size(), i + window + 1);
    for (size_t j = i; j < end; ++j) {
      if (norms[j] > 2.0 * eps) {
        held = false;
        break;
      }
    }
    if (held) return i * dt;
  }
  return std::nullopt;
}

}  // namespace gsc
