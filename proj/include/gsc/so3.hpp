#pragma once

#include <cmath>
#include <random>

#include "gsc/errors.hpp"
#include "gsc/types.hpp"

namespace gsc {

/// Cross-product (hat) map: hat(r) * w == r.cross(w).
template <typename Derived>
Mat3T<typename Derived::Scalar> hat(const Eigen::MatrixBase<Derived>& r) {
  using S = typename Derived::Scalar;
  Mat3T<S> m;
  m << S(0), -r(2), r(1),
       r(2), S(0), -r(0),
      -r(1), r(0), S(0);
  return m;
}

/// Inverse of hat(). The input is antisymmetrized first so that integrator
/// round-off does not leak into the result; inputs that are genuinely far
/// from antisymmetric are rejected.
template <typename Derived>
Vec3T<typename Derived::Scalar> vee(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const Mat3T<S> sym = m + m.transpose();
  if (sym.norm() > S(1e-6) * m.norm()) {
    throw AsymmetryError("vee: matrix is not antisymmetric");
  }
  const Mat3T<S> a = (m - m.transpose()) / S(2);
  return Vec3T<S>(a(2, 1), a(0, 2), a(1, 0));
}

/// Exponential map so(3) -> SO(3) (Rodrigues). Below 1e-8 rad the
/// sin/cos coefficients switch to a 2nd-order Taylor expansion to avoid
/// sin(t)/t cancellation.
template <typename Derived>
Mat3T<typename Derived::Scalar> exp_so3(const Eigen::MatrixBase<Derived>& w) {
  using S = typename Derived::Scalar;
  const S angle = w.norm();
  const Mat3T<S> k = hat(w);
  S c1, c2;  // R = I + c1*K + c2*K^2
  if (angle < S(1e-8)) {
    c1 = S(1) - angle * angle / S(6);
    c2 = S(0.5) - angle * angle / S(24);
  } else {
    c1 = std::sin(angle) / angle;
    c2 = (S(1) - std::cos(angle)) / (angle * angle);
  }
  return Mat3T<S>::Identity() + c1 * k + c2 * k * k;
}

/// Logarithm SO(3) -> so(3); returns the rotation vector with angle in [0, pi].
template <typename Derived>
Vec3T<typename Derived::Scalar> log_so3(const Eigen::MatrixBase<Derived>& r) {
  using S = typename Derived::Scalar;
  const S cos_angle =
      std::clamp((r.trace() - S(1)) / S(2), S(-1), S(1));
  const S angle = std::acos(cos_angle);
  if (angle < S(1e-8)) {
    // R ~ I + hat(w): read the vector off the antisymmetric part.
    const Mat3T<S> a = (r - r.transpose()) / S(2);
    return Vec3T<S>(a(2, 1), a(0, 2), a(1, 0));
  }
  if (angle > S(M_PI) - S(1e-6)) {
    // Near pi the antisymmetric part vanishes; recover the axis from the
    // symmetric part R ~ I + 2*hat(s)^2 = 2*s*s^T - I + 2*(1-|s|^2)...
    const Mat3T<S> b = (r + Mat3T<S>::Identity()) / S(2);
    Vec3T<S> axis = b.diagonal().cwiseMax(S(0)).cwiseSqrt();
    // Fix signs using the largest component.
    int imax = 0;
    b.diagonal().maxCoeff(&imax);
    for (int i = 0; i < 3; ++i) {
      if (i != imax && b(imax, i) < S(0)) axis(i) = -axis(i);
    }
    axis.normalize();
    return angle * axis;
  }
  const Mat3T<S> a = (r - r.transpose()) * (angle / (S(2) * std::sin(angle)));
  return Vec3T<S>(a(2, 1), a(0, 2), a(1, 0));
}

/// Frobenius distance of R^T R from the identity.
template <typename Derived>
typename Derived::Scalar orthonormality_residual(
    const Eigen::MatrixBase<Derived>& r) {
  using S = typename Derived::Scalar;
  return (r.transpose() * r - Mat3T<S>::Identity()).norm();
}

/// True if R is orthonormal within tol and right-handed.
template <typename Derived>
bool is_rotation(const Eigen::MatrixBase<Derived>& r,
                 typename Derived::Scalar tol =
                     typename Derived::Scalar(1e-9)) {
  return orthonormality_residual(r) <= tol &&
         r.determinant() > typename Derived::Scalar(0);
}

/// Nearest rotation matrix (polar projection via SVD). Idempotent on
/// matrices that already are rotations.
template <typename Derived>
Mat3T<typename Derived::Scalar> project_so3(
    const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.determinant() <= S(1e-12)) {
    throw SingularError("project_so3: determinant not positive");
  }
  Eigen::JacobiSVD<Mat3T<S>> svd(
      m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3T<S> r = svd.matrixU() * svd.matrixV().transpose();
  if (r.determinant() < S(0)) {
    Mat3T<S> flip = Mat3T<S>::Identity();
    flip(2, 2) = S(-1);
    r = svd.matrixU() * flip * svd.matrixV().transpose();
  }
  return r;
}

/// Random rotation for sampling-based tests: uniformly random axis times a
/// uniform angle in [0, pi). Reproducible from the generator's seed.
template <typename Rng>
Mat3 random_rotation(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec3 axis;
  do {
    axis = Vec3(gauss(rng), gauss(rng), gauss(rng));
  } while (axis.norm() < 1e-12);
  axis.normalize();
  std::uniform_real_distribution<double> uang(0.0, M_PI);
  return exp_so3(Vec3(uang(rng) * axis));
}

/// Random unit vector, reproducible from the generator's seed.
template <typename Rng>
Vec3 random_unit_vector(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(gauss(rng), gauss(rng), gauss(rng));
  } while (v.norm() < 1e-12);
  return v.normalized();
}

}  // namespace gsc
