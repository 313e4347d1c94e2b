#include "mooring/newton.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cstdio>
#include <string>

#include "mooring/errors.hpp"

namespace mooring {

namespace {

double inf_norm(const Vec3& v) { return v.cwiseAbs().maxCoeff(); }

bool try_evaluate(const ResidualFn& f, const Vec3& u, Vec3& out) {
  try {
    out = f(u);
  } catch (const SolverError&) {
    return false;
  }
  return out.allFinite();
}

}  // namespace

Mat3 fd_jacobian(const ResidualFn& f, const Vec3& u, const Vec3& f_u, const Vec3& typical_scale,
                 double step_scale) {
  Mat3 jac;
  for (int j = 0; j < 3; ++j) {
    Vec3 shifted = u;
    const double h = step_scale * std::max(std::abs(u[j]), typical_scale[j]);
    shifted[j] = u[j] + h;
    const double exact_h = shifted[j] - u[j];
    jac.col(j) = (f(shifted) - f_u) / exact_h;
  }
  return jac;
}

Mat3 fd_jacobian(const ResidualFn& f, const Vec3& u, const Vec3& typical_scale,
                 double step_scale) {
  return fd_jacobian(f, u, f(u), typical_scale, step_scale);
}

NewtonResult newton_solve(const ResidualFn& f, const Vec3& u0, const NewtonSettings& settings,
                          const Vec3& typical_scale) {
  NewtonResult res;
  res.u = u0;
  if (!try_evaluate(f, u0, res.residual)) {
    throw SolverError(ErrorKind::EvaluationFailed, "residual cannot be evaluated at the initial guess");
  }
  res.residual_norm = inf_norm(res.residual);
  double step_length = 1.0;

  for (;;) {
    if (settings.observer) {
      settings.observer({res.iterations, res.u, res.residual, res.residual_norm, step_length});
    }
    if (res.residual_norm <= settings.tol) return res;
    if (res.iterations >= settings.max_iter) {
      char norm[32];
      std::snprintf(norm, sizeof norm, "%.3e", res.residual_norm);
      throw SolverError(ErrorKind::NoConvergence, "Newton reached " + std::to_string(settings.max_iter) +
                                                      " iterations with ||C|| = " + norm);
    }

    Mat3 jac;
    try {
      jac = fd_jacobian(f, res.u, res.residual, typical_scale, settings.fd_step_scale);
    } catch (const SolverError& e) {
      throw SolverError(ErrorKind::EvaluationFailed,
                        "Jacobian evaluation failed at iteration " +
                            std::to_string(res.iterations) + " (" + e.what() + ")");
    }
    if (!jac.allFinite()) {
      throw SolverError(ErrorKind::EvaluationFailed,
                        "non-finite Jacobian at iteration " + std::to_string(res.iterations));
    }

    const Eigen::FullPivLU<Mat3> lu(jac);
    const double jac_norm = jac.cwiseAbs().maxCoeff();
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (!(jac_norm > 0.0) || min_pivot < 1e-14 * jac_norm) {
      throw SolverError(ErrorKind::SingularJacobian,
                        "singular Jacobian at iteration " + std::to_string(res.iterations));
    }
    const Vec3 delta = lu.solve(res.residual);

    step_length = 1.0;
    Vec3 trial_u, trial_c;
    bool accepted = false;
    for (int halving = 0; halving <= settings.max_halvings; ++halving) {
      trial_u = res.u - step_length * delta;
      if (try_evaluate(f, trial_u, trial_c)) {
        accepted = true;
        break;
      }
      step_length *= 0.5;
    }
    if (!accepted) {
      throw SolverError(ErrorKind::EvaluationFailed,
                        "no evaluable point along the Newton step at iteration " +
                            std::to_string(res.iterations));
    }
    res.u = trial_u;
    res.residual = trial_c;
    res.residual_norm = inf_norm(trial_c);
    ++res.iterations;
  }
}

}  // namespace mooring
