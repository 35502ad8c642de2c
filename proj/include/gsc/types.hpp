#pragma once

#include <Eigen/Dense>

namespace gsc {

template <typename Scalar>
using Vec3T = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Vec4T = Eigen::Matrix<Scalar, 4, 1>;
template <typename Scalar>
using Mat2T = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Mat3T = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar>
using Mat4T = Eigen::Matrix<Scalar, 4, 4>;

using Vec3 = Vec3T<double>;
using Vec4 = Vec4T<double>;
using Mat2 = Mat2T<double>;
using Mat3 = Mat3T<double>;
using Mat4 = Mat4T<double>;

}  // namespace gsc
