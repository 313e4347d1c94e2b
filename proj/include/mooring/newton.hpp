#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "mooring/model.hpp"

namespace mooring {

using ResidualFn = std::function<Vec3(const Vec3& u)>;

struct NewtonIterate {
  int iteration = 0;  // number of updates applied so far
  Vec3 u = Vec3::Zero();
  Vec3 residual = Vec3::Zero();
  double residual_norm = 0.0;  // max-norm
  double step_length = 0.0;    // backtracking factor of the update that produced u
};

struct NewtonSettings {
  double tol = 1e-8;
  int max_iter = 50;
  double fd_step_scale = std::sqrt(std::numeric_limits<double>::epsilon());
  int max_halvings = 20;
  /// Called once per iterate (including the initial guess) when set.
  std::function<void(const NewtonIterate&)> observer;
};

struct NewtonResult {
  Vec3 u = Vec3::Zero();
  Vec3 residual = Vec3::Zero();
  double residual_norm = 0.0;
  int iterations = 0;
};

/// Forward-difference Jacobian. Column j uses the step
/// h_j = step_scale * max(|u_j|, typical_scale_j), rounded so that
/// u_j + h_j - u_j == h_j exactly.
Mat3 fd_jacobian(const ResidualFn& f, const Vec3& u, const Vec3& f_u, const Vec3& typical_scale,
                 double step_scale);
Mat3 fd_jacobian(const ResidualFn& f, const Vec3& u, const Vec3& typical_scale,
                 double step_scale);

/// Plain Newton iteration u <- u - J^-1 C(u) until ||C||_inf <= tol. When a
/// trial point cannot be evaluated the update is halved (at most
/// max_halvings times) before giving up with EvaluationFailed. Throws
/// SingularJacobian when the smallest LU pivot falls below 1e-14 ||J||, and
/// NoConvergence after max_iter updates.
NewtonResult newton_solve(const ResidualFn& f, const Vec3& u0, const NewtonSettings& settings,
                          const Vec3& typical_scale = Vec3::Ones());

}  // namespace mooring
