#pragma once

#include <algorithm>
#include <cmath>

#include "gsc/errors.hpp"
#include "gsc/so3.hpp"
#include "gsc/types.hpp"

namespace gsc {

/// The two attitude tracking-error sets supported by the controllers.
///
/// SetOne is the trace-based error: fast near the target, but its error
/// vector magnitude is not monotone in the rotation angle beyond 90 deg.
/// SetTwo divides by sqrt(1 + tr[Rd^T R]); its error vector stays monotone
/// up to (but excluding) the antipodal attitude, at the cost of being
/// undefined there.
enum class ErrorSet { One, Two };

namespace detail {

template <typename S>
inline S antipodal_guard(S trace_rd_r) {
  const S root_arg = S(1) + trace_rd_r;
  if (root_arg <= S(1e-12)) {
    throw AntipodalError(
        "attitude error set two undefined at antipodal attitudes");
  }
  return root_arg;
}

}  // namespace detail

/// Scalar attitude error. 0 at coincidence, 2 at the antipodal attitude.
template <typename S>
S attitude_error_value(const Mat3T<S>& r, const Mat3T<S>& rd, ErrorSet set) {
  const S tr = (rd.transpose() * r).trace();
  S psi;
  if (set == ErrorSet::One) {
    psi = (S(3) - tr) / S(2);
  } else {
    psi = S(2) - std::sqrt(detail::antipodal_guard(tr));
  }
  return std::clamp(psi, S(0), S(2));
}

/// Attitude error vector (left-trivialized gradient of the scalar error).
template <typename S>
Vec3T<S> attitude_error_vector(const Mat3T<S>& r, const Mat3T<S>& rd,
                               ErrorSet set) {
  const Mat3T<S> q = rd.transpose() * r;
  const Mat3T<S> a = (q - q.transpose()) / S(2);
  Vec3T<S> e(a(2, 1), a(0, 2), a(1, 0));
  if (set == ErrorSet::Two) {
    e /= std::sqrt(detail::antipodal_guard(q.trace()));
  }
  return e;
}

/// Angular velocity error: body rate minus the desired body rate expressed
/// in the current body frame.
template <typename S>
Vec3T<S> angular_velocity_error(const Mat3T<S>& r, const Vec3T<S>& w,
                                const Mat3T<S>& rd, const Vec3T<S>& wd) {
  return w - r.transpose() * rd * wd;
}

/// Transport matrix E mapping the angular-velocity error onto the attitude
/// error-vector rate: d/dt e_R = E(R, Rd) e_omega. For SetOne its spectral
/// norm is at most 1; for SetTwo at most 1/2.
template <typename S>
Mat3T<S> transport_matrix(const Mat3T<S>& r, const Mat3T<S>& rd,
                          ErrorSet set) {
  const Mat3T<S> p = r.transpose() * rd;  // tr[R^T Rd] == tr[Rd^T R]
  const Mat3T<S> core = p.trace() * Mat3T<S>::Identity() - p;
  if (set == ErrorSet::One) {
    return core / S(2);
  }
  const S root_arg = detail::antipodal_guard(p.trace());
  const Vec3T<S> e = attitude_error_vector(r, rd, ErrorSet::Two);
  return (core + S(2) * e * e.transpose()) / (S(2) * std::sqrt(root_arg));
}

/// Reference-tracking feedforward of the angular-velocity-error dynamics:
/// d/dt e_omega = J^{-1}(u - w x Jw) + a_d with
/// a_d = hat(w) R^T Rd wd - R^T Rd wd_dot.
template <typename S>
Vec3T<S> tracking_feedforward(const Mat3T<S>& r, const Vec3T<S>& w,
                              const Mat3T<S>& rd, const Vec3T<S>& wd,
                              const Vec3T<S>& wd_dot) {
  const Mat3T<S> rel = r.transpose() * rd;
  return w.cross(Vec3T<S>(rel * wd)) - rel * wd_dot;
}

}  // namespace gsc
