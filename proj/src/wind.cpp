#include "gsc/wind.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gsc/errors.hpp"

namespace gsc {

WindProfile WindProfile::from_table(
    std::vector<std::pair<double, Vec3>> samples) {
  if (samples.empty()) {
    throw ConfigError("wind table: no samples");
  }
  for (size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].first <= samples[i - 1].first) {
      throw ConfigError("wind table: time column must be increasing");
    }
  }
  WindProfile p;
  p.kind_ = Kind::Table;
  p.table_ = std::move(samples);
  return p;
}

WindProfile WindProfile::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("wind csv: cannot open " + path);
  }
  std::vector<std::pair<double, Vec3>> samples;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double t, wx, wy, wz;
    if (!(row >> t >> wx >> wy >> wz)) {
      throw ConfigError("wind csv: bad row '" + line + "'");
    }
    samples.emplace_back(t, Vec3(wx, wy, wz));
  }
  return from_table(std::move(samples));
}

WindProfile WindProfile::gust(const Vec3& base, const Vec3& amplitude,
                              double t0, double duration) {
  if (duration <= 0) {
    throw ConfigError("wind gust: duration must be positive");
  }
  WindProfile p;
  p.kind_ = Kind::Gust;
  p.base_ = base;
  p.amplitude_ = amplitude;
  p.t0_ = t0;
  p.duration_ = duration;
  return p;
}

Vec3 WindProfile::at(double t) const {
  switch (kind_) {
    case Kind::Zero:
      return Vec3::Zero();
    case Kind::Gust: {
      if (t < t0_ || t > t0_ + duration_) return base_;
      const double phase = 2.0 * M_PI * (t - t0_) / duration_;
      return base_ + 0.5 * (1.0 - std::cos(phase)) * amplitude_;
    }
    case Kind::Table: {
      if (t <= table_.front().first) return table_.front().second;
      if (t >= table_.back().first) return table_.back().second;
      auto hi = std::upper_bound(
          table_.begin(), table_.end(), t,
          [](double value, const auto& s) { return value < s.first; });
      auto lo = hi - 1;
      const double alpha = (t - lo->first) / (hi->first - lo->first);
      return (1.0 - alpha) * lo->second + alpha * hi->second;
    }
  }
  return Vec3::Zero();
}

Disturbance wind_disturbance(const RigidBodyState& state,
                             const WindModel& wind, double t) {
  const Vec3 v_rel = wind.profile.at(t) - state.velocity;
  Disturbance d;
  d.force = 0.5 * wind.air_density * wind.drag_coeff * wind.ref_area *
            v_rel.norm() * v_rel;
  d.torque = (wind.torque_arm * Vec3::UnitZ())
                 .cross(Vec3(state.attitude.transpose() * d.force));
  return d;
}

}  // namespace gsc
