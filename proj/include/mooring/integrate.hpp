#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mooring/model.hpp"

namespace mooring {

using OdeRhs = std::function<Vec6(double s, const Vec6& y)>;

struct IntegratorSettings {
  double abs_tol = 1e-8;
  double h_init = 0.0;
  double h_min = 0.0;
  double h_max = 0.0;
  double safety = 0.9;
  std::size_t max_steps = 1'000'000;

  /// Step bounds derived from the span length: h_init = L/100,
  /// h_min = L * 1e-12, h_max = L.
  static IntegratorSettings for_length(double length, double abs_tol = 1e-8);

  bool operator==(const IntegratorSettings&) const = default;
};

struct TrajectorySample {
  double s = 0.0;
  StateVector state;
};

/// Accepted integration points, strictly increasing in s, from 0 to L.
struct Trajectory {
  std::vector<TrajectorySample> samples;

  const TrajectorySample& front() const { return samples.front(); }
  const TrajectorySample& back() const { return samples.back(); }
  std::size_t size() const { return samples.size(); }
};

struct Rkf45Step {
  Vec6 y5;
  double error_estimate = 0.0;  // max-norm of the 4th/5th order difference
};

/// One Runge-Kutta-Fehlberg 4(5) step; the 5th order solution is propagated.
Rkf45Step rkf45_step(const OdeRhs& rhs, const Vec6& y, double s, double h);

/// Adaptive RKF45 integration over [0, length]. Every accepted step is
/// recorded; the final step is clamped to land exactly on `length`.
Trajectory integrate_ivp(const OdeRhs& rhs, const StateVector& initial, double length,
                         const IntegratorSettings& settings);

}  // namespace mooring
