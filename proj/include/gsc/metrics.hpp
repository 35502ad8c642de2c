#pragma once

#include <optional>
#include <vector>

#include "gsc/telemetry.hpp"

namespace gsc {

/// Root-mean-square total motor effort up to time t (relative to the start
/// of the recording): sqrt((1/t) integral of sum_i f_i^2), by trapezoidal
/// quadrature on the recording grid. Throws RangeError when t is outside
/// the recorded span or not positive.
double f_rms(const Telemetry& telemetry, double t);

/// f_rms evaluated at every grid point after the first.
std::vector<double> f_rms_series(const Telemetry& telemetry);

/// f_rms(proposed, t) - f_rms(benchmark, t). Throws GridMismatchError when
/// the two recordings do not share a grid.
double delta_f_rms(const Telemetry& proposed, const Telemetry& benchmark,
                   double t);

/// First time the series enters the eps-tube and stays within the 2*eps
/// tube for the debounce window. Returns nullopt when no such time exists.
std::optional<double> reaching_time(const std::vector<double>& norms,
                                    double dt, double eps,
                                    double debounce = 0.2);

}  // namespace gsc
