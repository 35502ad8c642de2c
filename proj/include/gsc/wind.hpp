#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gsc/plant.hpp"
#include "gsc/types.hpp"

namespace gsc {

/// Wind velocity as a function of time. Either a piecewise-linear table
/// (endpoints held outside the tabulated range) or a parametric 1-cosine
/// gust on top of a constant base flow.
class WindProfile {
 public:
  /// Zero wind everywhere.
  WindProfile() = default;

  /// Piecewise-linear table of (t, wind velocity) samples, t increasing.
  static WindProfile from_table(std::vector<std::pair<double, Vec3>> samples);

  /// Parse a CSV file with rows "t,wx,wy,wz" (comment lines start with #).
  static WindProfile from_csv(const std::string& path);

  /// base + 0.5*amplitude*(1 - cos(2*pi*(t-t0)/duration)) inside the gust
  /// window, base outside.
  static WindProfile gust(const Vec3& base, const Vec3& amplitude, double t0,
                          double duration);

  Vec3 at(double t) const;

 private:
  enum class Kind { Zero, Table, Gust };
  Kind kind_ = Kind::Zero;
  std::vector<std::pair<double, Vec3>> table_;
  Vec3 base_ = Vec3::Zero();
  Vec3 amplitude_ = Vec3::Zero();
  double t0_ = 0.0;
  double duration_ = 1.0;
};

/// Aerodynamic drag disturbance model. The drag force acts in the inertial
/// frame; the induced torque assumes the force is applied at a lever arm
/// along the body z axis.
struct WindModel {
  WindProfile profile;
  Mat3 drag_coeff = (Mat3() << 0.2, 0, 0,
                               0, 0.22, 0,
                               0, 0, 0.5).finished();  // dimensionless
  Mat3 ref_area = (Mat3() << 0.0907, 0, 0,
                             0, 0.0907, 0,
                             0, 0, 0.4004).finished();  // m^2
  double air_density = 1.225;  // kg/m^3
  double torque_arm = 0.04;    // m along body z
};

/// Quadratic drag from the relative air velocity:
/// force = 0.5 rho C_D A_D |v_rel| v_rel (inertial, component-wise through
/// the diagonal matrices); torque = (arm e3) x (R^T force) in the body frame.
Disturbance wind_disturbance(const RigidBodyState& state,
                             const WindModel& wind, double t);

}  // namespace gsc
