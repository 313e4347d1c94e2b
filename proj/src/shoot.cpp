#include "mooring/shoot.hpp"

#include <cmath>
#include <string>

#include "mooring/errors.hpp"

namespace mooring {

namespace {

// Characteristic position of a joint, when it has one (anchor or spring
// reference point, with any fixed transverse coordinates applied).
std::optional<Vec3> reference_position(const BoundaryJoint& joint) {
  if (const auto* j = std::get_if<Spherical>(&joint)) return j->anchor;
  if (const auto* j = std::get_if<Spring>(&joint)) return j->ref_point;
  if (const auto* j = std::get_if<SpringLinearAnnular>(&joint)) {
    Vec3 p = j->ref_point;
    const Partition part = partition(joint);
    const Vec3 fixed = position_targets(joint);
    for (int c : part.constrained) {
      if (c < kNx) p[c] = fixed[c];
    }
    return p;
  }
  if (std::holds_alternative<LinearAnnular>(joint) || std::holds_alternative<Punctual>(joint)) {
    return position_targets(joint);
  }
  return std::nullopt;
}

OdeRhs make_rhs(const ShootingProblem& problem) {
  return [&problem](double s, const Vec6& y) {
    return state_derivative(StateVector::unpack(y), s, problem.load, problem.props);
  };
}

}  // namespace

StateVector assemble_initial_state(const BoundaryJoint& joint_start, const Vec3& unknowns) {
  const Partition part = partition(joint_start);
  Vec6 phi = Vec6::Zero();
  for (int k = 0; k < 3; ++k) phi[part.unknown[k]] = unknowns[k];

  const Vec3 fixed_position = position_targets(joint_start);
  for (int c : part.constrained) {
    if (c < kNx) phi[c] = fixed_position[c];
  }
  const Vec3 force = boundary_force(joint_start, phi.head<3>(), End::Start);
  for (int c : part.constrained) {
    if (c >= kNx) phi[c] = force[c - kNx];
  }

  StateVector state = StateVector::unpack(phi);
  if (!(state.tension.norm() > 0.0)) {
    throw SolverError(ErrorKind::SingularTension, "assembled start tension is zero");
  }
  return state;
}

Vec3 residual(const ShootingProblem& problem, const Vec3& unknowns, Trajectory& trajectory) {
  const StateVector start = assemble_initial_state(problem.joint_start, unknowns);
  trajectory =
      integrate_ivp(make_rhs(problem), start, problem.props.length_rest, problem.integrator);

  const StateVector& end = trajectory.back().state;
  const Partition part = partition(problem.joint_end);
  const Vec3 pos_target = position_targets(problem.joint_end);
  const Vec3 force_target = boundary_force(problem.joint_end, end.position, End::End);

  Vec3 c;
  for (int k = 0; k < 3; ++k) {
    const int comp = part.constrained[k];
    c[k] = comp < kNx ? end.position[comp] - pos_target[comp]
                      : end.tension[comp - kNx] - force_target[comp - kNx];
  }
  return c;
}

Vec3 residual(const ShootingProblem& problem, const Vec3& unknowns) {
  Trajectory scratch;
  return residual(problem, unknowns, scratch);
}

Vec3 typical_scale(const ShootingProblem& problem) {
  const double wl = std::abs(relative_weight(problem.props)) * problem.props.length_rest;
  const double tension_scale = wl > 0.0 ? wl : problem.props.axial_stiffness() * 1e-6;
  const Partition part = partition(problem.joint_start);
  Vec3 scale;
  for (int k = 0; k < 3; ++k) scale[k] = part.unknown[k] < kNx ? 1.0 : tension_scale;
  return scale;
}

Vec3 guess_tension(const ShootingProblem& problem) {
  const double omega = relative_weight(problem.props);
  const double dir = direction_sign(problem.convention);
  if (omega == 0.0) {
    Vec3 chord(dir, 0.0, 0.0);
    const auto a = problem.position_guess ? problem.position_guess
                                          : reference_position(problem.joint_start);
    const auto b = reference_position(problem.joint_end);
    if (a && b && (*b - *a).norm() > 0.0) chord = (*b - *a).normalized();
    return problem.props.axial_stiffness() * 1e-6 * chord;
  }
  const double magnitude = std::abs(omega) * problem.props.length_rest / (problem.guess_c * std::sqrt(2.0));
  // Heavy lines leave the start heading down, buoyant lines heading up.
  const double vertical = omega > 0.0 ? -1.0 : 1.0;
  return Vec3(dir * magnitude, 0.0, vertical * magnitude);
}

Vec3 default_guess(const ShootingProblem& problem) {
  const Partition part = partition(problem.joint_start);
  const Vec3 tension = guess_tension(problem);

  Vec3 position = Vec3::Zero();
  if (problem.position_guess) {
    position = *problem.position_guess;
  } else if (const auto* sp = std::get_if<Spring>(&problem.joint_start)) {
    // n(0) = -k (p - r)  =>  r = p + n / k
    position = sp->ref_point + tension / sp->stiffness;
  } else if (const auto* sla = std::get_if<SpringLinearAnnular>(&problem.joint_start)) {
    position = sla->ref_point + tension / sla->stiffness;
  } else if (auto ref = reference_position(problem.joint_end)) {
    position = *ref;
  }

  Vec3 u;
  for (int k = 0; k < 3; ++k) {
    const int comp = part.unknown[k];
    u[k] = comp < kNx ? position[comp] : tension[comp - kNx];
  }
  return u;
}

void validate(const ShootingProblem& problem) {
  validate(problem.props);
  validate(problem.joint_start);
  validate(problem.joint_end);
  if (!(problem.guess_c > 0.0) || !std::isfinite(problem.guess_c)) {
    throw SolverError(ErrorKind::InvalidInput, "guess_c must be finite and > 0");
  }
  if (problem.position_guess && !problem.position_guess->allFinite()) {
    throw SolverError(ErrorKind::InvalidInput, "position guess must be finite");
  }
  if (!(problem.newton.tol > 0.0) || problem.newton.max_iter < 1) {
    throw SolverError(ErrorKind::InvalidInput, "Newton settings need tol > 0 and max_iter >= 1");
  }
}

ShootingSolution solve(const ShootingProblem& problem, const Vec3& initial_unknowns) {
  validate(problem);
  const ResidualFn fn = [&problem](const Vec3& u) { return residual(problem, u); };
  const NewtonResult nr = newton_solve(fn, initial_unknowns, problem.newton, typical_scale(problem));

  ShootingSolution sol;
  sol.unknowns_at_start = nr.u;
  sol.residual = residual(problem, nr.u, sol.trajectory);
  sol.residual_norm = sol.residual.cwiseAbs().maxCoeff();
  sol.newton_iterations = nr.iterations;
  return sol;
}

ShootingSolution solve(const ShootingProblem& problem) {
  validate(problem);
  return solve(problem, default_guess(problem));
}

}  // namespace mooring
