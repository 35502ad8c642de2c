#include "gsc/monitors.hpp"

#include <algorithm>
#include <cmath>

namespace gsc {

namespace {

// Relative slack for the discrete-derivative inequalities; covers the
// central-difference truncation and the zero-order-hold offset.
constexpr double kRateSlack = 0.02;
constexpr double kAlgebraicSlack = 1e-9;

struct Range {
  size_t begin;
  size_t end;
};

Range clip(const Telemetry& tl, size_t begin, size_t end) {
  const size_t n = tl.size();
  if (end == 0 || end > n) end = n;
  begin = std::min(begin, end);
  return {begin, end};
}

void check_decrease(MonitorReport& rep, const Telemetry& tl,
                    const Range& r) {
  if (r.end - r.begin < 2) return;
  const double floor = 1e-12 * std::max(tl.rows[r.begin].lyap_v, 1.0);
  size_t ok = 0;
  for (size_t i = r.begin; i + 1 < r.end; ++i) {
    const double v0 = tl.rows[i].lyap_v;
    const double v1 = tl.rows[i + 1].lyap_v;
    if (v1 < v0 || v1 <= floor) ++ok;
  }
  rep.decrease_ok = ok;
  rep.decrease_fraction =
      static_cast<double>(ok) / static_cast<double>(r.end - r.begin - 1);
}

void check_attitude_core(MonitorReport& rep, const Telemetry& tl,
                         const AttitudeGains& g, ErrorSet set,
                         const Range& r) {
  rep.samples = r.end - r.begin;
  if (rep.samples == 0) return;

  const TelemetryRow& first = tl.rows[r.begin];
  rep.psi_a = first.lyap_v_psi / (g.eta * g.k_R);
  rep.mu = envelope_mu(first.lyap_v, g, set, rep.psi_a);
  rep.tau = decay_rate(g, set, rep.psi_a);
  const Mat2 w1 = w1_matrix(g, set);
  const Mat2 w2 = w2_matrix(g, set, std::min(rep.psi_a, 2.0 - 1e-12));
  const Mat2 w3 = w3_matrix(g);

  check_decrease(rep, tl, r);

  for (size_t i = r.begin; i < r.end; ++i) {
    const TelemetryRow& row = tl.rows[i];
    const Eigen::Vector2d z(row.e_R_norm, row.e_omega_norm);
    const double lower = z.dot(w1 * z);
    const double upper = z.dot(w2 * z);
    const double slack = kAlgebraicSlack * std::max(1.0, upper);
    if (row.lyap_v < lower - slack) {
      rep.sandwich_violations.push_back({row.t, lower - row.lyap_v});
    }
    if (row.lyap_v > upper + slack) {
      rep.sandwich_violations.push_back({row.t, row.lyap_v - upper});
    }

    const double envelope =
        std::min(2.0, rep.mu * std::exp(-rep.tau * (row.t - first.t)));
    if (row.psi > envelope + kAlgebraicSlack * std::max(1.0, rep.mu)) {
      rep.envelope_violations.push_back({row.t, row.psi - envelope});
    }

    if (i > r.begin && i + 1 < r.end) {
      const double v_dot =
          (tl.rows[i + 1].lyap_v - tl.rows[i - 1].lyap_v) / (2.0 * tl.dt);
      const double bound = g.eta * z.dot(w3 * z);
      const double residual = v_dot + bound;
      const double slack_rate =
          kRateSlack * bound + kAlgebraicSlack * std::max(1.0, first.lyap_v);
      if (residual > slack_rate) {
        rep.rate_violations.push_back({row.t, residual});
      }
    }
  }
}

}  // namespace

MonitorReport attitude_monitors(const Telemetry& telemetry,
                                const AttitudeGains& gains, ErrorSet set,
                                size_t begin, size_t end) {
  MonitorReport rep;
  check_attitude_core(rep, telemetry, gains, set, clip(telemetry, begin, end));
  return rep;
}

MonitorReport position_monitors(const Telemetry& telemetry,
                                const PositionGains& gains, ErrorSet set,
                                double mass, double B, double theta,
                                size_t begin, size_t end) {
  MonitorReport rep;
  const Range r = clip(telemetry, begin, end);
  check_attitude_core(rep, telemetry, gains.attitude, set, r);
  if (r.end - r.begin == 0) return rep;

  const ThetaMax tm = theta_max_unconstrained(gains, mass);
  const double theta_used = theta > 0.0 ? theta : 0.99 * tm.value;
  const PiMatrices pi = build_pi_matrices(gains, mass, B, theta_used,
                                          RoaVariant::PositionFree);
  const Mat2 pi5 = pi5_matrix(gains, pi.pi1, pi.pi2);
  const double v0 = tl_front(telemetry, r);

  for (size_t i = r.begin; i < r.end; ++i) {
    const TelemetryRow& row = telemetry.rows[i];
    if (row.cos_tilt < 1.0 - row.psi_one - kAlgebraicSlack) {
      rep.cosine_violations.push_back(
          {row.t, 1.0 - row.psi_one - row.cos_tilt});
    }
    if (i > r.begin && i + 1 < r.end) {
      const Eigen::Vector2d zx(row.e_x_norm, row.e_v_norm);
      const Eigen::Vector2d zr(row.e_R_norm, row.e_omega_norm);
      const Eigen::Vector2d z(zx.norm(), zr.norm());
      const double vg_dot = (telemetry.rows[i + 1].lyap_v_g -
                             telemetry.rows[i - 1].lyap_v_g) /
                            (2.0 * telemetry.dt);
      const double bound = z.dot(pi5 * z);
      const double residual = vg_dot + bound;
      if (residual >
          kRateSlack * std::abs(bound) + kAlgebraicSlack * std::max(1.0, v0)) {
        rep.full_rate_violations.push_back({row.t, residual});
      }
    }
  }
  return rep;
}

double tl_front(const Telemetry&, const MonitorReport::Range&);  // not defined

}  // namespace gsc
