#pragma once

#include <optional>

#include "mooring/boundary.hpp"
#include "mooring/integrate.hpp"
#include "mooring/model.hpp"
#include "mooring/newton.hpp"

namespace mooring {

/// Two-point boundary value problem for one uniform segment. The start joint
/// sits at s = 0 and must leave exactly three unknowns; the end joint at s = L
/// supplies the three shooting constraints.
struct ShootingProblem {
  LineProperties props;
  DistributedLoad load;
  BoundaryJoint joint_start = Spherical{};
  BoundaryJoint joint_end = Spherical{};
  IntegratorSettings integrator;
  NewtonSettings newton;

  // First-guess controls. The tension guess follows a line leaving the start
  // at 45 degrees downward with resultant such that omega L / F = guess_c,
  // pointing along `convention`.
  Convention convention = Convention::I;
  double guess_c = 10.0;
  std::optional<Vec3> position_guess;
};

struct ShootingSolution {
  Trajectory trajectory;
  Vec3 unknowns_at_start = Vec3::Zero();
  Vec3 residual = Vec3::Zero();
  double residual_norm = 0.0;
  int newton_iterations = 0;
};

/// Start state from the start joint and the Newton unknowns (ordered by
/// ascending component index among the unknown components). Positions are
/// filled first so spring forces see the assembled position.
StateVector assemble_initial_state(const BoundaryJoint& joint_start, const Vec3& unknowns);

/// Shooting constraints C(u): for each constrained component of the end
/// joint, ascending, r_i(L) - target_i or n_i(L) - boundary_force_i.
Vec3 residual(const ShootingProblem& problem, const Vec3& unknowns);

/// Same as residual() but also returns the integrated trajectory.
Vec3 residual(const ShootingProblem& problem, const Vec3& unknowns, Trajectory& trajectory);

/// Newton typical scales per unknown: 1 m for positions, |omega| L for tensions.
Vec3 typical_scale(const ShootingProblem& problem);

/// Tension resultant used by the first guess (see ShootingProblem).
Vec3 guess_tension(const ShootingProblem& problem);

Vec3 default_guess(const ShootingProblem& problem);

/// Throws InvalidInput for malformed problems (props, joints, settings).
void validate(const ShootingProblem& problem);

ShootingSolution solve(const ShootingProblem& problem);
ShootingSolution solve(const ShootingProblem& problem, const Vec3& initial_unknowns);

}  // namespace mooring
