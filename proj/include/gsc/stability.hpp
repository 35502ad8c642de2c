#pragma once

#include <string>

#include "gsc/attitude_error.hpp"
#include "gsc/control.hpp"
#include "gsc/types.hpp"

namespace gsc {

// Closed-form 2x2 spectral helpers. Kept explicit so every reported
// eigenvalue is exactly reproducible in tests.
double sym2_eig_min(const Mat2& m);
double sym2_eig_max(const Mat2& m);
bool sym2_positive_definite(const Mat2& m);
double spectral_norm2(const Mat2& m);

/// Strict attitude-mode gain condition eta > k_R / k_omega^2.
bool check_attitude_gains(const AttitudeGains& g);

/// Attitude-mode region of attraction: the initial scalar error is below 2
/// and the initial angular-velocity error satisfies
/// |e_omega(0)|^2 < 2 eta k_R (2 - psi(0)).
bool attitude_roa_contains(const Mat3& r0, const Mat3& rd0, const Vec3& e_w0,
                           const AttitudeGains& g, ErrorSet set);

/// Position-mode region of exponential stability: psi(0) < psi_p and
/// |e_omega(0)|^2 < 2 eta k_R (psi_p - psi(0)).
bool position_roa_contains(const Mat3& r0, const Mat3& rx0, const Vec3& e_w0,
                           const AttitudeGains& g, ErrorSet set,
                           double psi_p);

/// Complement band psi_p <= psi(0) < 2 with the attitude-mode
/// angular-velocity bound: the region of exponential attractiveness.
bool attractiveness_region_contains(const Mat3& r0, const Mat3& rx0,
                                    const Vec3& e_w0, const AttitudeGains& g,
                                    ErrorSet set, double psi_p);

/// Regions of attraction the position analysis can be run in.
enum class RoaVariant {
  Attitude,          // attitude mode only
  PositionFree,      // no bound on the initial position/velocity error
  PositionBoundedX,  // bounded initial position error
  PositionBoundedV,  // bounded initial velocity error
  AttractivenessOnly
};

/// Largest admissible attitude-error-vector norm bound for the
/// position-free region; the second argument of the min is where the
/// off-diagonal Pi_1 terms drive its determinant to zero.
struct ThetaMax {
  double value = 0.0;
  double first_arg = 0.0;  // a k_v^2 / (a k_v^2 + m k_x)
  double delta1 = 0.0;
  double delta2 = 0.0;
  bool clamped = false;  // true when min{...} exceeded the norm cap of 1
};
ThetaMax theta_max_unconstrained(const PositionGains& g, double mass);

/// Bound for the variants that restrict the initial position or velocity
/// error: only the diagonal-positivity argument remains.
double theta_max_bounded(const PositionGains& g, double mass);

/// Maps between the attitude-error-vector norm bound theta and the scalar
/// error bound psi_p, per error set.
double theta_of_psi_p(double psi_p, ErrorSet set);
double psi_p_of_theta(double theta, ErrorSet set);

/// The two quadratic-form matrices of the translational Lyapunov rate
/// bound, per variant. error_bound is e_x_max (BoundedX) or e_v_max
/// (BoundedV) and ignored otherwise. Throws ThetaTooLargeError when theta
/// is not strictly below the variant's admissible maximum.
struct PiMatrices {
  Mat2 pi1;
  Mat2 pi2;
};
PiMatrices build_pi_matrices(const PositionGains& g, double mass, double B,
                             double theta, RoaVariant variant,
                             double error_bound = 0.0);

/// Coupled-gain condition lambda_min(W3) > |Pi2|^2 / (4 eta lambda_min(Pi1))
/// with W3 = diag(k_R^2, k_omega^2). Throws NotPositiveDefiniteError when
/// Pi1 is not positive definite.
bool check_w3_condition(const PositionGains& g, const Mat2& pi1,
                        const Mat2& pi2);

/// Quadratic-form matrices sandwiching the attitude Lyapunov function.
/// psi_bound is the trajectory bound on the scalar attitude error (psi_a in
/// attitude mode, psi_p in position mode); only the SetOne upper matrix
/// depends on it.
Mat2 w1_matrix(const AttitudeGains& g, ErrorSet set);
Mat2 w2_matrix(const AttitudeGains& g, ErrorSet set, double psi_bound);
Mat2 w3_matrix(const AttitudeGains& g);

/// Quadratic-form matrices sandwiching the translational Lyapunov function.
Mat2 pi3_matrix(const PositionGains& g, double mass);
Mat2 pi4_matrix(const PositionGains& g, double mass);

/// Rate matrix of the complete-system Lyapunov bound.
Mat2 pi5_matrix(const PositionGains& g, const Mat2& pi1, const Mat2& pi2);

/// Exponential decay rate tau = eta lambda_min(W3) / lambda_max(W2).
double decay_rate(const AttitudeGains& g, ErrorSet set, double psi_bound);

/// Scalar-error envelope factor: psi(t) < min{2, mu exp(-tau t)}.
double envelope_mu(double v0, const AttitudeGains& g, ErrorSet set,
                   double psi_bound);

/// Everything the gain/ROA gate reports, flattened for serialization.
struct StabilityReport {
  ErrorSet set = ErrorSet::One;
  RoaVariant variant = RoaVariant::PositionFree;
  bool attitude_gain_ok = false;
  bool w3_condition_ok = false;
  double theta_first_arg = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double theta_max = 0.0;
  bool theta_clamped = false;
  double theta = 0.0;  // the value the matrices were built at
  double psi_p = 0.0;
  double bound_B = 0.0;
  double psi0 = 0.0;
  double admissible_e_omega = 0.0;  // sqrt(2 eta k_R (psi_p - psi0)), attitude: psi_p -> 2
  double error_bound = 0.0;
  double pi1_eig_min = 0.0, pi1_eig_max = 0.0;
  double pi2_norm = 0.0;
  double pi2_sym_eig_min = 0.0, pi2_sym_eig_max = 0.0;
  double pi3_eig_min = 0.0, pi3_eig_max = 0.0;
  double pi4_eig_min = 0.0, pi4_eig_max = 0.0;
  double pi5_eig_min = 0.0, pi5_eig_max = 0.0;
  double w1_eig_min = 0.0, w1_eig_max = 0.0;
  double w2_eig_min = 0.0, w2_eig_max = 0.0;
  double w3_eig_min = 0.0, w3_eig_max = 0.0;
  double tau = 0.0;
};

/// Run the full gate for a gain set. theta defaults to a fraction just
/// below the variant's maximum when not supplied (theta <= 0 requests the
/// default). psi0 is the initial scalar attitude error used for the
/// admissible angular-velocity bound.
StabilityReport analyze_gains(const PositionGains& g, double mass, double B,
                              ErrorSet set, RoaVariant variant,
                              double theta = 0.0, double psi0 = 0.0,
                              double error_bound = 0.0);

/// Attitude-only gate (no translational matrices).
StabilityReport analyze_attitude_gains(const AttitudeGains& g, ErrorSet set,
                                       double psi0 = 0.0);

/// Flat "key = value" rendering, one entry per line.
std::string to_text(const StabilityReport& report);

}  // namespace gsc
