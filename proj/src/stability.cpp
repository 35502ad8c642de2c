#include "gsc/stability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gsc/errors.hpp"

namespace gsc {

namespace {
constexpr double kThetaCap = 1.0 - 1e-9;  // |e_R| never reaches 1 inside the ROA
}

double sym2_eig_min(const Mat2& m) {
  const double mean = (m(0, 0) + m(1, 1)) / 2.0;
  const double half_diff = (m(0, 0) - m(1, 1)) / 2.0;
  const double off = (m(0, 1) + m(1, 0)) / 2.0;
  return mean - std::hypot(half_diff, off);
}

double sym2_eig_max(const Mat2& m) {
  const double mean = (m(0, 0) + m(1, 1)) / 2.0;
  const double half_diff = (m(0, 0) - m(1, 1)) / 2.0;
  const double off = (m(0, 1) + m(1, 0)) / 2.0;
  return mean + std::hypot(half_diff, off);
}

bool sym2_positive_definite(const Mat2& m) { return sym2_eig_min(m) > 0.0; }

double spectral_norm2(const Mat2& m) {
  // Largest singular value via the eigenvalues of M^T M.
  const Mat2 g = m.transpose() * m;
  return std::sqrt(std::max(0.0, sym2_eig_max(g)));
}

bool check_attitude_gains(const AttitudeGains& g) {
  return g.condition_ok();
}

bool attitude_roa_contains(const Mat3& r0, const Mat3& rd0, const Vec3& e_w0,
                           const AttitudeGains& g, ErrorSet set) {
  const double psi0 = attitude_error_value(r0, rd0, set);
  if (psi0 >= 2.0) return false;
  return e_w0.squaredNorm() < 2.0 * g.eta * g.k_R * (2.0 - psi0);
}

bool position_roa_contains(const Mat3& r0, const Mat3& rx0, const Vec3& e_w0,
                           const AttitudeGains& g, ErrorSet set,
                           double psi_p) {
  const double psi0 = attitude_error_value(r0, rx0, set);
  if (!(psi0 < psi_p && psi_p < 1.0)) return false;
  return e_w0.squaredNorm() < 2.0 * g.eta * g.k_R * (psi_p - psi0);
}

bool attractiveness_region_contains(const Mat3& r0, const Mat3& rx0,
                                    const Vec3& e_w0, const AttitudeGains& g,
                                    ErrorSet set, double psi_p) {
  const double psi0 = attitude_error_value(r0, rx0, set);
  if (!(psi_p <= psi0 && psi0 < 2.0)) return false;
  return e_w0.squaredNorm() < 2.0 * g.eta * g.k_R * (2.0 - psi0);
}

ThetaMax theta_max_unconstrained(const PositionGains& g, double mass) {
  const double a = g.a, kx = g.k_x, kv = g.k_v, m = mass;
  ThetaMax out;
  out.first_arg = a * kv * kv / (a * kv * kv + m * kx);
  const double kx2 = kx * kx, kx4 = kx2 * kx2;
  const double kv2 = kv * kv, kv4 = kv2 * kv2;
  out.delta1 = 2.0 * kv2 *
               std::sqrt(4.0 * kx4 * kv4 * a * a * a * a +
                         4.0 * kx4 * kx * kv2 * a * a * a * m +
                         2.0 * kx4 * kx2 * m * m * a * a) /
               (kx4 * m * m);
  out.delta2 = -4.0 * a * a * kv4 / (m * m * kx2) - 2.0 * a * kv2 / (m * kx);
  out.value = std::min(out.first_arg, out.delta1 + out.delta2);
  if (out.value > kThetaCap) {
    out.value = kThetaCap;
    out.clamped = true;
  }
  return out;
}

double theta_max_bounded(const PositionGains& g, double mass) {
  return g.a * g.k_v * g.k_v / (g.a * g.k_v * g.k_v + mass * g.k_x);
}

double theta_of_psi_p(double psi_p, ErrorSet set) {
  if (set == ErrorSet::One) {
    return std::sqrt(psi_p * (2.0 - psi_p));
  }
  return std::sqrt(psi_p * (1.0 - psi_p / 4.0));
}

double psi_p_of_theta(double theta, ErrorSet set) {
  const double root = std::sqrt(std::max(0.0, 1.0 - theta * theta));
  if (set == ErrorSet::One) {
    return 1.0 - root;
  }
  return 2.0 * (1.0 - root);
}

PiMatrices build_pi_matrices(const PositionGains& g, double mass, double B,
                             double theta, RoaVariant variant,
                             double error_bound) {
  const double a = g.a, kx = g.k_x, kv = g.k_v, m = mass;
  const double limit = variant == RoaVariant::PositionFree
                           ? theta_max_unconstrained(g, mass).value
                           : theta_max_bounded(g, mass);
  if (!(theta < limit)) {
    throw ThetaTooLargeError(
        "theta exceeds the admissible maximum for this region variant");
  }
  PiMatrices out;
  if (variant == RoaVariant::PositionFree) {
    const double off = -a * kx * kv * theta - m * kx * kx * theta / (2.0 * kv);
    out.pi1 << a * kx * kx * (1.0 - theta), off,
               off, a * kv * kv - theta * (m * kx + a * kv * kv);
    out.pi2 << B * kx, 0.0,
               B * kv, 0.0;
    return out;
  }
  out.pi1 << a * kx * kx * (1.0 - theta), 0.0,
             0.0, a * kv * kv - theta * (m * kx + a * kv * kv);
  const double spill = (2.0 * a * kx * kv + m * kx * kx / kv) * error_bound;
  if (variant == RoaVariant::PositionBoundedX) {
    out.pi2 << B * kx, 0.0,
               B * kv + spill, 0.0;
  } else if (variant == RoaVariant::PositionBoundedV) {
    out.pi2 << B * kx + spill, 0.0,
               B * kv, 0.0;
  } else {
    out.pi2 << B * kx, 0.0,
               B * kv, 0.0;
  }
  return out;
}

bool check_w3_condition(const PositionGains& g, const Mat2& pi1,
                        const Mat2& pi2) {
  const double lmin = sym2_eig_min(pi1);
  if (lmin <= 0.0) {
    throw NotPositiveDefiniteError("Pi1 must be positive definite");
  }
  const double norm2 = spectral_norm2(pi2);
  const Mat2 w3 = w3_matrix(g.attitude);
  return sym2_eig_min(w3) >
         norm2 * norm2 / (4.0 * g.attitude.eta * lmin);
}

Mat2 w1_matrix(const AttitudeGains& g, ErrorSet set) {
  const double base = g.k_R * g.k_R / (2.0 * g.k_omega);
  const double w1 = set == ErrorSet::One
                        ? base + g.eta * g.k_R * g.k_omega
                        : base + 2.0 * g.eta * g.k_R * g.k_omega;
  Mat2 m;
  m << w1, -g.k_R / 2.0,
       -g.k_R / 2.0, g.k_omega / 2.0;
  return m;
}

Mat2 w2_matrix(const AttitudeGains& g, ErrorSet set, double psi_bound) {
  const double base = g.k_R * g.k_R / (2.0 * g.k_omega);
  double w2;
  if (set == ErrorSet::One) {
    w2 = base + 2.0 / (2.0 - psi_bound) * g.eta * g.k_R * g.k_omega;
  } else {
    w2 = base + 4.0 * g.eta * g.k_R * g.k_omega;
  }
  Mat2 m;
  m << w2, g.k_R / 2.0,
       g.k_R / 2.0, g.k_omega / 2.0;
  return m;
}

Mat2 w3_matrix(const AttitudeGains& g) {
  Mat2 m;
  m << g.k_R * g.k_R, 0.0,
       0.0, g.k_omega * g.k_omega;
  return m;
}

Mat2 pi3_matrix(const PositionGains& g, double mass) {
  Mat2 m;
  const double corner = g.a * g.k_x * g.k_v +
                        mass * g.k_x * g.k_x / (2.0 * g.k_v);
  m << corner, -mass * g.k_x / 2.0,
       -mass * g.k_x / 2.0, mass * g.k_v / 2.0;
  return m;
}

Mat2 pi4_matrix(const PositionGains& g, double mass) {
  Mat2 m;
  const double corner = g.a * g.k_x * g.k_v +
                        mass * g.k_x * g.k_x / (2.0 * g.k_v);
  m << corner, mass * g.k_x / 2.0,
       mass * g.k_x / 2.0, mass * g.k_v / 2.0;
  return m;
}

Mat2 pi5_matrix(const PositionGains& g, const Mat2& pi1, const Mat2& pi2) {
  Mat2 m;
  const double half_norm = spectral_norm2(pi2) / 2.0;
  m << sym2_eig_min(pi1), -half_norm,
       -half_norm, g.attitude.eta * sym2_eig_min(w3_matrix(g.attitude));
  return m;
}

double decay_rate(const AttitudeGains& g, ErrorSet set, double psi_bound) {
  return g.eta * sym2_eig_min(w3_matrix(g)) /
         sym2_eig_max(w2_matrix(g, set, psi_bound));
}

double envelope_mu(double v0, const AttitudeGains& g, ErrorSet set,
                   double psi_bound) {
  const double lmin = sym2_eig_min(w1_matrix(g, set));
  if (set == ErrorSet::One) {
    return v0 / ((2.0 - psi_bound) * lmin);
  }
  return 2.0 * v0 / lmin;
}

namespace {

void fill_attitude_matrices(StabilityReport& r, const AttitudeGains& g,
                            ErrorSet set, double psi_bound) {
  const Mat2 w1 = w1_matrix(g, set);
  const Mat2 w2 = w2_matrix(g, set, psi_bound);
  const Mat2 w3 = w3_matrix(g);
  r.w1_eig_min = sym2_eig_min(w1);
  r.w1_eig_max = sym2_eig_max(w1);
  r.w2_eig_min = sym2_eig_min(w2);
  r.w2_eig_max = sym2_eig_max(w2);
  r.w3_eig_min = sym2_eig_min(w3);
  r.w3_eig_max = sym2_eig_max(w3);
  r.tau = decay_rate(g, set, psi_bound);
}

}  // namespace

StabilityReport analyze_attitude_gains(const AttitudeGains& g, ErrorSet set,
                                       double psi0) {
  StabilityReport r;
  r.set = set;
  r.variant = RoaVariant::Attitude;
  r.attitude_gain_ok = check_attitude_gains(g);
  r.psi0 = psi0;
  r.psi_p = 2.0;  // attitude mode admits the whole non-antipodal set
  r.admissible_e_omega =
      psi0 < 2.0 ? std::sqrt(2.0 * g.eta * g.k_R * (2.0 - psi0)) : 0.0;
  // The trajectory bound psi_a depends on the initial surface value; with
  // e_omega(0) unknown here it is evaluated at e_omega(0) = 0.
  fill_attitude_matrices(r, g, set, psi0);
  return r;
}

StabilityReport analyze_gains(const PositionGains& g, double mass, double B,
                              ErrorSet set, RoaVariant variant,
                              double theta, double psi0,
                              double error_bound) {
  StabilityReport r;
  r.set = set;
  r.variant = variant;
  r.bound_B = B;
  r.psi0 = psi0;
  r.error_bound = error_bound;
  r.attitude_gain_ok = check_attitude_gains(g.attitude);

  const ThetaMax tm = theta_max_unconstrained(g, mass);
  r.theta_first_arg = tm.first_arg;
  r.delta1 = tm.delta1;
  r.delta2 = tm.delta2;
  double theta_cap =
      variant == RoaVariant::PositionFree ? tm.value
                                          : theta_max_bounded(g, mass);
  r.theta_clamped = variant == RoaVariant::PositionFree && tm.clamped;

  // The scalar-error bound must stay below 1; for the normalized error set
  // that caps theta below sqrt(3)/2.
  double psi_cap = psi_p_of_theta(theta_cap, set);
  if (psi_cap >= 1.0) {
    psi_cap = 1.0 - 1e-9;
    theta_cap = theta_of_psi_p(psi_cap, set);
    r.theta_clamped = true;
  }
  r.theta_max = theta_cap;
  r.theta = theta > 0.0 ? theta : 0.99 * theta_cap;
  r.psi_p = psi_p_of_theta(r.theta, set);
  r.admissible_e_omega =
      psi0 < r.psi_p
          ? std::sqrt(2.0 * g.attitude.eta * g.attitude.k_R *
                      (r.psi_p - psi0))
          : 0.0;

  const PiMatrices pi = build_pi_matrices(g, mass, B, r.theta, variant,
                                          error_bound);
  r.pi1_eig_min = sym2_eig_min(pi.pi1);
  r.pi1_eig_max = sym2_eig_max(pi.pi1);
  r.pi2_norm = spectral_norm2(pi.pi2);
  const Mat2 pi2_sym = (pi.pi2 + pi.pi2.transpose()) / 2.0;
  r.pi2_sym_eig_min = sym2_eig_min(pi2_sym);
  r.pi2_sym_eig_max = sym2_eig_max(pi2_sym);
  const Mat2 pi3 = pi3_matrix(g, mass);
  const Mat2 pi4 = pi4_matrix(g, mass);
  r.pi3_eig_min = sym2_eig_min(pi3);
  r.pi3_eig_max = sym2_eig_max(pi3);
  r.pi4_eig_min = sym2_eig_min(pi4);
  r.pi4_eig_max = sym2_eig_max(pi4);
  const Mat2 pi5 = pi5_matrix(g, pi.pi1, pi.pi2);
  r.pi5_eig_min = sym2_eig_min(pi5);
  r.pi5_eig_max = sym2_eig_max(pi5);
  r.w3_condition_ok =
      r.pi1_eig_min > 0.0 && check_w3_condition(g, pi.pi1, pi.pi2);

  fill_attitude_matrices(r, g.attitude, set, r.psi_p);
  return r;
}

namespace {
const char* variant_name(RoaVariant v) {
  switch (v) {
    case RoaVariant::Attitude: return "attitude";
    case RoaVariant::PositionFree: return "position_free";
    case RoaVariant::PositionBoundedX: return "position_bounded_x";
    case RoaVariant::PositionBoundedV: return "position_bounded_v";
    case RoaVariant::AttractivenessOnly: return "attractiveness_only";
  }
  return "?";
}
}  // namespace

std::string to_text(const StabilityReport& r) {
  std::ostringstream out;
  out.precision(12);
  out << "error_set = " << (r.set == ErrorSet::One ? "one" : "two") << "\n"
      << "variant = " << variant_name(r.variant) << "\n"
      << "attitude_gain_ok = " << (r.attitude_gain_ok ? "true" : "false")
      << "\n";
  if (r.variant != RoaVariant::Attitude) {
    out << "w3_condition_ok = " << (r.w3_condition_ok ? "true" : "false")
        << "\n"
        << "theta_first_arg = " << r.theta_first_arg << "\n"
        << "delta1 = " << r.delta1 << "\n"
        << "delta2 = " << r.delta2 << "\n"
        << "theta_max = " << r.theta_max << "\n"
        << "theta_clamped = " << (r.theta_clamped ? "true" : "false") << "\n"
        << "theta = " << r.theta << "\n"
        << "bound_B = " << r.bound_B << "\n"
        << "error_bound = " << r.error_bound << "\n";
  }
  out << "psi_p = " << r.psi_p << "\n"
      << "psi0 = " << r.psi0 << "\n"
      << "admissible_e_omega = " << r.admissible_e_omega << "\n";
  if (r.variant != RoaVariant::Attitude) {
    out << "pi1_eig_min = " << r.pi1_eig_min << "\n"
        << "pi1_eig_max = " << r.pi1_eig_max << "\n"
        << "pi2_norm = " << r.pi2_norm << "\n"
        << "pi2_sym_eig_min = " << r.pi2_sym_eig_min << "\n"
        << "pi2_sym_eig_max = " << r.pi2_sym_eig_max << "\n"
        << "pi3_eig_min = " << r.pi3_eig_min << "\n"
        << "pi3_eig_max = " << r.pi3_eig_max << "\n"
        << "pi4_eig_min = " << r.pi4_eig_min << "\n"
        << "pi4_eig_max = " << r.pi4_eig_max << "\n"
        << "pi5_eig_min = " << r.pi5_eig_min << "\n"
        << "pi5_eig_max = " << r.pi5_eig_max << "\n";
  }
  out << "w1_eig_min = " << r.w1_eig_min << "\n"
      << "w1_eig_max = " << r.w1_eig_max << "\n"
      << "w2_eig_min = " << r.w2_eig_min << "\n"
      << "w2_eig_max = " << r.w2_eig_max << "\n"
      << "w3_eig_min = " << r.w3_eig_min << "\n"
      << "w3_eig_max = " << r.w3_eig_max << "\n"
      << "tau = " << r.tau << "\n";
  return out.str();
}

}  // namespace gsc
