#include "mooring/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mooring/errors.hpp"

namespace mooring {

namespace {

// Fehlberg 4(5) tableau.
constexpr double c2 = 1.0 / 4.0, c3 = 3.0 / 8.0, c4 = 12.0 / 13.0, c5 = 1.0, c6 = 1.0 / 2.0;

constexpr double a21 = 1.0 / 4.0;
constexpr double a31 = 3.0 / 32.0, a32 = 9.0 / 32.0;
constexpr double a41 = 1932.0 / 2197.0, a42 = -7200.0 / 2197.0, a43 = 7296.0 / 2197.0;
constexpr double a51 = 439.0 / 216.0, a52 = -8.0, a53 = 3680.0 / 513.0, a54 = -845.0 / 4104.0;
constexpr double a61 = -8.0 / 27.0, a62 = 2.0, a63 = -3544.0 / 2565.0, a64 = 1859.0 / 4104.0,
                 a65 = -11.0 / 40.0;

constexpr double b1 = 16.0 / 135.0, b3 = 6656.0 / 12825.0, b4 = 28561.0 / 56430.0,
                 b5 = -9.0 / 50.0, b6 = 2.0 / 55.0;

// 5th minus 4th order weights.
constexpr double e1 = b1 - 25.0 / 216.0, e3 = b3 - 1408.0 / 2565.0, e4 = b4 - 2197.0 / 4104.0,
                 e5 = b5 + 1.0 / 5.0, e6 = b6;

constexpr double kShrinkFloor = 0.1;
constexpr double kGrowthCap = 5.0;

void check_settings(const IntegratorSettings& st, double length) {
  const bool ok = st.abs_tol > 0.0 && st.h_min > 0.0 && st.h_min <= st.h_init &&
                  st.h_init <= st.h_max && st.h_max <= length && st.safety > 0.0 &&
                  st.safety < 1.0 && st.max_steps > 0;
  if (!ok) throw SolverError(ErrorKind::InvalidInput, "inconsistent integrator settings");
}

}  // namespace

IntegratorSettings IntegratorSettings::for_length(double length, double abs_tol) {
  IntegratorSettings st;
  st.abs_tol = abs_tol;
  st.h_init = length / 100.0;
  st.h_min = length * 1e-12;
  st.h_max = length;
  return st;
}

Rkf45Step rkf45_step(const OdeRhs& rhs, const Vec6& y, double s, double h) {
  const Vec6 k1 = rhs(s, y);
  const Vec6 k2 = rhs(s + c2 * h, y + h * (a21 * k1));
  const Vec6 k3 = rhs(s + c3 * h, y + h * (a31 * k1 + a32 * k2));
  const Vec6 k4 = rhs(s + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
  const Vec6 k5 = rhs(s + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
  const Vec6 k6 =
      rhs(s + c6 * h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));

  Rkf45Step out;
  out.y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
  out.error_estimate = (h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6)).cwiseAbs().maxCoeff();
  if (!out.y5.allFinite() || !std::isfinite(out.error_estimate)) {
    throw SolverError(ErrorKind::NonFiniteState, "RKF45 step left the finite domain at s = " +
                                                     std::to_string(s));
  }
  return out;
}

Trajectory integrate_ivp(const OdeRhs& rhs, const StateVector& initial, double length,
                         const IntegratorSettings& settings) {
  check_settings(settings, length);
  if (!(initial.tension.norm() > 0.0)) {
    throw SolverError(ErrorKind::SingularTension, "initial tension norm must be > 0");
  }

  Trajectory traj;
  traj.samples.push_back({0.0, initial});

  Vec6 y = initial.packed();
  double s = 0.0;
  double h = settings.h_init;
  std::size_t steps = 0;

  while (s < length) {
    if (++steps > settings.max_steps) {
      throw SolverError(ErrorKind::MaxStepsExceeded,
                        "exceeded " + std::to_string(settings.max_steps) + " steps");
    }
    const double remaining = length - s;
    bool last = false;
    if (h >= remaining) {
      h = remaining;
      last = true;
    } else if (remaining - h < settings.h_min) {
      // No sliver step at the end: take it all or split what is left.
      if (remaining < 2.0 * settings.h_min) {
        h = remaining;
        last = true;
      } else {
        h = 0.5 * remaining;
      }
    }

    const Rkf45Step step = rkf45_step(rhs, y, s, h);
    const double err = step.error_estimate;
    double factor = err > 0.0 ? settings.safety * std::pow(settings.abs_tol / err, 0.2) : kGrowthCap;
    factor = std::clamp(factor, kShrinkFloor, kGrowthCap);

    if (err <= settings.abs_tol) {
      s = last ? length : s + h;
      y = step.y5;
      traj.samples.push_back({s, StateVector::unpack(y)});
      h = std::clamp(h * factor, settings.h_min, settings.h_max);
    } else {
      if (h <= settings.h_min || (last && h < 2.0 * settings.h_min)) {
        throw SolverError(ErrorKind::StepUnderflow,
                          "step below h_min required at s = " + std::to_string(s));
      }
      h = std::max(h * factor, settings.h_min);
    }
  }
  return traj;
}

}  // namespace mooring
