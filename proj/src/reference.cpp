#include "gsc/reference.hpp"

#include <algorithm>
#include <cmath>

#include "gsc/errors.hpp"
#include "gsc/so3.hpp"

namespace gsc {

Sp8 Sp8::fit(const Boundary& start, const Boundary& end, double t0,
             double t1) {
  if (!(t1 > t0)) {
    throw IllConditionedError("sp8 fit: t1 must exceed t0");
  }
  const double T = t1 - t0;
  Sp8 p;
  p.t0_ = t0;
  p.t1_ = t1;

  // Normalized variable s = (t - t0) / T. The five start conditions pin
  // coefficients 0..4 directly; the four end conditions give a 4x4 system
  // for coefficients 5..8.
  auto& c = p.coeffs_;
  const double start_d[5] = {start.value, start.d1, start.d2, start.d3,
                             start.d4};
  double fact = 1.0;
  double tpow = 1.0;
  for (int j = 0; j < 5; ++j) {
    c(j) = start_d[j] * tpow / fact;
    fact *= j + 1;
    tpow *= T;
  }

  const double end_d[4] = {end.value, end.d1, end.d2, end.d3};
  Eigen::Matrix4d A;
  Eigen::Vector4d b;
  for (int j = 0; j < 4; ++j) {
    double known = 0.0;
    for (int k = j; k < 5; ++k) {
      double falling = 1.0;
      for (int i = 0; i < j; ++i) falling *= k - i;
      known += falling * c(k);
    }
    for (int i = 0; i < 4; ++i) {
      const int k = 5 + i;
      double falling = 1.0;
      for (int q = 0; q < j; ++q) falling *= k - q;
      A(j, i) = falling;
    }
    b(j) = end_d[j] * std::pow(T, j) - known;
  }
  const Eigen::Vector4d tail = A.fullPivLu().solve(b);
  for (int i = 0; i < 4; ++i) c(5 + i) = tail(i);

  // Verify the fit reproduces its own boundary data.
  double residual = 0.0;
  residual = std::max(residual, std::abs(p.value(t0) - start.value));
  residual = std::max(residual, std::abs(p.derivative(t0, 1) - start.d1));
  residual = std::max(residual, std::abs(p.derivative(t0, 2) - start.d2));
  residual = std::max(residual, std::abs(p.derivative(t0, 3) - start.d3));
  residual = std::max(residual, std::abs(p.derivative(t0, 4) - start.d4));
  residual = std::max(residual, std::abs(p.value(t1) - end.value));
  residual = std::max(residual, std::abs(p.derivative(t1, 1) - end.d1));
  residual = std::max(residual, std::abs(p.derivative(t1, 2) - end.d2));
  residual = std::max(residual, std::abs(p.derivative(t1, 3) - end.d3));
  const double scale =
      std::max({1.0, std::abs(start.value), std::abs(end.value),
                std::abs(start.d1), std::abs(end.d1), std::abs(start.d2),
                std::abs(end.d2), std::abs(start.d3), std::abs(end.d3),
                std::abs(start.d4)});
  if (residual > 1e-6 * scale) {
    throw IllConditionedError("sp8 fit: boundary residual too large");
  }
  return p;
}

double Sp8::derivative(double t, int order) const {
  const double T = t1_ - t0_;
  const double s = (t - t0_) / T;
  // Horner evaluation of the order-th derivative in the normalized
  // variable, then chain rule through s = (t - t0)/T.
  double acc = 0.0;
  for (int k = 8; k >= order; --k) {
    double falling = 1.0;
    for (int q = 0; q < order; ++q) falling *= k - q;
    acc = acc * s + falling * coeffs_(k);
  }
  return acc / std::pow(T, order);
}

Sp8Vec3 sp8_translation(const Vec3& p0, const Vec3& v0, const Vec3& a0,
                        const Vec3& p1, const Vec3& v1, const Vec3& a1,
                        double t0, double t1) {
  Sp8Vec3 out;
  Sp8* channels[3] = {&out.x, &out.y, &out.z};
  for (int i = 0; i < 3; ++i) {
    Sp8::Boundary start{p0(i), v0(i), a0(i), 0.0, 0.0};
    Sp8::Boundary end{p1(i), v1(i), a1(i), 0.0, 0.0};
    *channels[i] = Sp8::fit(start, end, t0, t1);
  }
  return out;
}

AttitudeRefFn pitch_profile_reference(const Sp8& pitch) {
  return [pitch](double t) {
    AttitudeRef ref;
    ref.rotation = exp_so3(Vec3(0.0, pitch.value(t), 0.0));
    ref.rate = Vec3(0.0, pitch.derivative(t, 1), 0.0);
    ref.rate_dot = Vec3(0.0, pitch.derivative(t, 2), 0.0);
    return ref;
  };
}

AttitudeRefFn constant_attitude_reference(const Mat3& rotation) {
  return [rotation](double) {
    return AttitudeRef{rotation, Vec3::Zero(), Vec3::Zero()};
  };
}

PositionRefFn sp8_position_reference(const Sp8Vec3& traj,
                                     const Vec3& heading) {
  const Vec3 h = heading.normalized();
  return [traj, h](double t) {
    PositionRef ref;
    ref.position = traj.value(t);
    ref.velocity = traj.derivative(t, 1);
    ref.acceleration = traj.derivative(t, 2);
    ref.heading = h;
    return ref;
  };
}

PositionRefFn constant_position_reference(const Vec3& target,
                                          const Vec3& heading) {
  const Vec3 h = heading.normalized();
  return [target, h](double) {
    PositionRef ref;
    ref.position = target;
    ref.heading = h;
    return ref;
  };
}

FlightScenario hover_scenario(const Vec3& position) {
  FlightScenario sc;
  sc.name = "hover";
  sc.initial_state.position = position;
  Phase phase;
  phase.t_end = 1.0;
  phase.mode = FlightMode::Position;
  phase.make_position = [](const RigidBodyState& state, double) {
    return constant_position_reference(state.position, Vec3::UnitX());
  };
  sc.phases.push_back(phase);
  return sc;
}

FlightScenario step90_scenario(double horizon) {
  FlightScenario sc;
  sc.name = "step90";
  Phase phase;
  phase.t_end = horizon;
  phase.mode = FlightMode::Attitude;
  phase.make_attitude = [](const RigidBodyState&, double) {
    return constant_attitude_reference(exp_so3(Vec3(0.0, M_PI / 2.0, 0.0)));
  };
  sc.phases.push_back(phase);
  return sc;
}

FlightScenario cmstep_scenario(double horizon) {
  FlightScenario sc;
  sc.name = "cmstep";
  Phase phase;
  phase.t_end = horizon;
  phase.mode = FlightMode::Position;
  phase.make_position = [](const RigidBodyState&, double) {
    return constant_position_reference(Vec3(0.01, 0.01, 0.01),
                                       Vec3::UnitX());
  };
  sc.phases.push_back(phase);
  return sc;
}

FlightScenario aggressive_scenario() {
  FlightScenario sc;
  sc.name = "aggressive";
  sc.initial_state.position = Vec3(0, 0, 5);

  Phase climb;
  climb.t_end = 4.0;
  climb.mode = FlightMode::Position;
  climb.make_position = [](const RigidBodyState& state, double t_start) {
    const Sp8Vec3 traj = sp8_translation(
        state.position, state.velocity, Vec3::Zero(), Vec3(0, 1, 10),
        Vec3(0, 0, 7), Vec3::Zero(), t_start, 4.0);
    return sp8_position_reference(traj, Vec3::UnitX());
  };
  sc.phases.push_back(climb);

  Phase flip;
  flip.t_end = 4.4;
  flip.mode = FlightMode::Attitude;
  flip.make_attitude = [](const RigidBodyState&, double t_start) {
    const Sp8 pitch = Sp8::fit({0, 0, 0, 0, 0}, {M_PI, 0, 0, 0, 0}, t_start,
                               4.4);
    return pitch_profile_reference(pitch);
  };
  sc.phases.push_back(flip);

  Phase recover;
  recover.t_end = 4.9;
  recover.mode = FlightMode::Attitude;
  recover.make_attitude = [](const RigidBodyState&, double) {
    return constant_attitude_reference(Mat3::Identity());
  };
  sc.phases.push_back(recover);

  Phase settle;
  settle.t_end = 10.0;
  settle.mode = FlightMode::Position;
  settle.make_position = [](const RigidBodyState& state, double t_start) {
    const Sp8Vec3 traj = sp8_translation(
        state.position, state.velocity, Vec3::Zero(), Vec3(-1, 1.5, 10),
        Vec3::Zero(), Vec3::Zero(), t_start, 10.0);
    return sp8_position_reference(traj, Vec3::UnitX());
  };
  sc.phases.push_back(settle);
  return sc;
}

double bound_B(const PositionRefFn& ref, double t0, double t1, double mass,
               double gravity, double dt) {
  double peak = 0.0;
  const int n = std::max(1, static_cast<int>(std::ceil((t1 - t0) / dt)));
  for (int i = 0; i <= n; ++i) {
    const double t = t0 + (t1 - t0) * i / n;
    const Vec3 f = mass * gravity * Vec3::UnitZ() +
                   mass * ref(t).acceleration;
    peak = std::max(peak, f.norm());
  }
  return 1.01 * peak;
}

}  // namespace gsc
