#include "mooring/catenary.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <string>

#include "mooring/errors.hpp"

namespace mooring {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kRelativeStepTol = 1e-12;
constexpr int kMaxIterations = 200;
constexpr int kMaxHalvings = 40;

double weight_scale(const LineProperties& props) {
  const double wl = std::abs(relative_weight(props)) * props.length_rest;
  return wl > 0.0 ? wl : 1.0;
}

// Which constraint rows are positions (true) or forces (false).
std::array<bool, 2> position_rows(const planar::Joint& end) {
  return std::visit(overloaded{
                        [](const planar::Ball&) { return std::array<bool, 2>{true, true}; },
                        [](const planar::Force&) { return std::array<bool, 2>{false, false}; },
                        [](const planar::Spring&) { return std::array<bool, 2>{false, false}; },
                        [](const planar::Annular&) { return std::array<bool, 2>{false, true}; },
                        [](const planar::SpringAnnular&) { return std::array<bool, 2>{false, true}; },
                    },
                    end);
}

// Which unknowns are positions (true) or tensions (false).
std::array<bool, 2> position_unknowns(const planar::Joint& start) {
  return std::visit(overloaded{
                        [](const planar::Ball&) { return std::array<bool, 2>{false, false}; },
                        [](const planar::Force&) { return std::array<bool, 2>{true, true}; },
                        [](const planar::Spring&) { return std::array<bool, 2>{true, true}; },
                        [](const planar::Annular&) { return std::array<bool, 2>{true, false}; },
                        [](const planar::SpringAnnular&) { return std::array<bool, 2>{true, false}; },
                    },
                    start);
}

std::optional<Vec2> reference_point(const planar::Joint& joint) {
  return std::visit(overloaded{
                        [](const planar::Ball& j) -> std::optional<Vec2> { return Vec2(j.x, j.z); },
                        [](const planar::Force&) -> std::optional<Vec2> { return std::nullopt; },
                        [](const planar::Spring& j) -> std::optional<Vec2> {
                          return Vec2(j.a_x, j.a_z);
                        },
                        [](const planar::Annular& j) -> std::optional<Vec2> {
                          return Vec2(0.0, j.z);
                        },
                        [](const planar::SpringAnnular& j) -> std::optional<Vec2> {
                          return Vec2(j.a_x, j.z);
                        },
                    },
                    joint);
}

bool try_constraints(const CatenaryCase& c, const Vec2& u, Vec2& out) {
  try {
    out = case_constraints(c, parameters_from_unknowns(c, u));
  } catch (const SolverError&) {
    return false;
  }
  return out.allFinite();
}

}  // namespace

LocalShape local_shape(double s, const CatenaryParameters& p, const LineProperties& props) {
  const double omega = relative_weight(props);
  const double ea = props.axial_stiffness();

  if (omega == 0.0) {
    const double norm = std::hypot(p.n_x0, p.n_z0);
    if (!(norm > 0.0)) throw SolverError(ErrorKind::SingularTension, "taut line without tension");
    const double stretch = s * (1.0 / norm + 1.0 / ea);
    return {p.n_x0 * stretch, p.n_z0 * stretch};
  }
  if (p.n_x0 == 0.0) {
    throw SolverError(ErrorKind::ZeroHorizontalTension, "catenary needs N_x0 != 0");
  }

  const double h = std::abs(p.n_x0);
  const double a = (p.n_z0 + omega * s) / h;
  const double b = p.n_z0 / h;
  const double X = h / omega * (std::asinh(a) - std::asinh(b)) + h * s / ea;
  // sqrt(1 + a^2) - sqrt(1 + b^2) rewritten to avoid cancellation.
  const double root_diff = (a - b) * (a + b) / (std::sqrt(1.0 + a * a) + std::sqrt(1.0 + b * b));
  const double Z = h / omega * root_diff + (p.n_z0 * s + 0.5 * omega * s * s) / ea;
  return {p.n_x0 > 0.0 ? X : -X, Z};
}

LocalTension local_tension(double s, const CatenaryParameters& p, const LineProperties& props) {
  return {p.n_x0, p.n_z0 + relative_weight(props) * s};
}

GlobalFields to_global(double s, const CatenaryParameters& p, const LineProperties& props) {
  const double sign = direction_sign(p.convention);
  const LocalShape shape = local_shape(s, p, props);
  const LocalTension n = local_tension(s, p, props);
  return {p.x_a + sign * shape.X, p.z_a + shape.Z, sign * n.N_x, n.N_z};
}

CatenaryParameters parameters_from_unknowns(const CatenaryCase& c, const Vec2& u) {
  const double sign = direction_sign(c.convention);
  CatenaryParameters p;
  p.convention = c.convention;
  // Start-side joint forces carry the -1 end sign: n(0) = -F.
  std::visit(overloaded{
                 [&](const planar::Ball& j) {
                   p.x_a = j.x;
                   p.z_a = j.z;
                   p.n_x0 = u[0];
                   p.n_z0 = u[1];
                 },
                 [&](const planar::Force& j) {
                   p.x_a = u[0];
                   p.z_a = u[1];
                   p.n_x0 = sign * -j.f_x;
                   p.n_z0 = -j.f_z;
                 },
                 [&](const planar::Spring& j) {
                   p.x_a = u[0];
                   p.z_a = u[1];
                   p.n_x0 = sign * -j.stiffness * (j.a_x - p.x_a);
                   p.n_z0 = -j.stiffness * (j.a_z - p.z_a);
                 },
                 [&](const planar::Annular& j) {
                   p.x_a = u[0];
                   p.z_a = j.z;
                   p.n_x0 = sign * -j.f_x;
                   p.n_z0 = u[1];
                 },
                 [&](const planar::SpringAnnular& j) {
                   p.x_a = u[0];
                   p.z_a = j.z;
                   p.n_x0 = sign * -j.stiffness * (j.a_x - p.x_a);
                   p.n_z0 = u[1];
                 },
             },
             c.start);
  return p;
}

Vec2 case_constraints(const CatenaryCase& c, const CatenaryParameters& params) {
  const GlobalFields g = to_global(c.props.length_rest, params, c.props);
  return std::visit(overloaded{
                        [&](const planar::Ball& j) { return Vec2(g.x - j.x, g.z - j.z); },
                        [&](const planar::Force& j) { return Vec2(g.n_x - j.f_x, g.n_z - j.f_z); },
                        [&](const planar::Spring& j) {
                          return Vec2(g.n_x - j.stiffness * (j.a_x - g.x),
                                      g.n_z - j.stiffness * (j.a_z - g.z));
                        },
                        [&](const planar::Annular& j) { return Vec2(g.n_x - j.f_x, g.z - j.z); },
                        [&](const planar::SpringAnnular& j) {
                          return Vec2(g.n_x - j.stiffness * (j.a_x - g.x), g.z - j.z);
                        },
                    },
                    c.end);
}

Vec2 oracle_default_guess(const CatenaryCase& c) {
  const double omega = relative_weight(c.props);
  const double sign = direction_sign(c.convention);
  // Local tension guess: 45 degrees downward, resultant omega L / c.
  Vec2 local;
  if (omega == 0.0) {
    local = Vec2(c.props.axial_stiffness() * 1e-6, 0.0);
  } else {
    const double m = std::abs(omega) * c.props.length_rest / (c.guess_c * std::sqrt(2.0));
    local = Vec2(m, omega > 0.0 ? -m : m);
  }
  const Vec2 global_n(sign * local[0], local[1]);

  Vec2 position = Vec2::Zero();
  if (c.position_guess) {
    position = *c.position_guess;
  } else if (const auto* sp = std::get_if<planar::Spring>(&c.start)) {
    position = Vec2(sp->a_x, sp->a_z) + global_n / sp->stiffness;
  } else if (const auto* sa = std::get_if<planar::SpringAnnular>(&c.start)) {
    position = Vec2(sa->a_x + global_n[0] / sa->stiffness, sa->z);
  } else if (auto ref = reference_point(c.end)) {
    position = *ref;
  }

  const auto pos = position_unknowns(c.start);
  if (pos[0] && pos[1]) return position;
  if (!pos[0] && !pos[1]) return local;
  return Vec2(position[0], local[1]);
}

CatenarySolution semi_analytic_solve(const CatenaryCase& c) {
  validate(c.props);
  const double wl = weight_scale(c.props);
  const double length = c.props.length_rest;
  const auto rows = position_rows(c.end);
  const auto cols = position_unknowns(c.start);
  const Vec2 row_scale(rows[0] ? length : wl, rows[1] ? length : wl);
  const Vec2 col_scale(cols[0] ? length : wl, cols[1] ? length : wl);
  auto scaled_norm = [&](const Vec2& r) { return r.cwiseQuotient(row_scale).cwiseAbs().maxCoeff(); };

  CatenarySolution sol;
  Vec2 u = oracle_default_guess(c);
  Vec2 r;
  if (!try_constraints(c, u, r) && c.position_guess) {
    // A spring start seeded at its reference point has no horizontal tension;
    // fall back to the spring-offset guess.
    CatenaryCase fallback = c;
    fallback.position_guess.reset();
    u = oracle_default_guess(fallback);
  }
  if (!try_constraints(c, u, r)) {
    throw SolverError(ErrorKind::EvaluationFailed, "catenary constraints undefined at the first guess");
  }

  bool converged = false;
  for (int it = 0; it < kMaxIterations && !converged; ++it) {
    Eigen::Matrix2d jac;
    for (int j = 0; j < 2; ++j) {
      const double h = 1e-7 * std::max(std::abs(u[j]), col_scale[j]);
      Vec2 up = u, um = u, rp, rm;
      up[j] += h;
      um[j] -= h;
      if (!try_constraints(c, up, rp) || !try_constraints(c, um, rm)) {
        throw SolverError(ErrorKind::EvaluationFailed, "catenary Jacobian evaluation failed");
      }
      jac.col(j) = (rp - rm) / (up[j] - um[j]);
    }
    const Eigen::FullPivLU<Eigen::Matrix2d> lu(jac);
    if (!lu.isInvertible()) throw SolverError(ErrorKind::SingularJacobian, "catenary Jacobian singular");
    const Vec2 delta = lu.solve(r);

    // Backtrack until the scaled residual does not grow and N_x0 != 0.
    double lambda = 1.0;
    Vec2 trial_u, trial_r;
    bool accepted = false;
    const double current = scaled_norm(r);
    for (int k = 0; k <= kMaxHalvings; ++k) {
      trial_u = u - lambda * delta;
      if (try_constraints(c, trial_u, trial_r) && scaled_norm(trial_r) <= current) {
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted) {
      // No decrease possible: at the root up to rounding.
      converged = true;
      break;
    }
    const Vec2 step = trial_u - u;
    u = trial_u;
    r = trial_r;
    sol.iterations = it + 1;
    sol.last_relative_step = 0.0;
    for (int j = 0; j < 2; ++j) {
      sol.last_relative_step =
          std::max(sol.last_relative_step, std::abs(step[j]) / std::max(std::abs(u[j]), col_scale[j]));
    }
    converged = sol.last_relative_step <= kRelativeStepTol;
  }

  sol.unknowns = u;
  sol.params = parameters_from_unknowns(c, u);
  sol.residual_norm = r.cwiseAbs().maxCoeff();
  if (!converged || sol.residual_norm > 1e-9 * std::max(wl, 1.0)) {
    throw SolverError(ErrorKind::NoConvergence,
                      "semi-analytic solve stopped with residual " + std::to_string(sol.residual_norm));
  }
  return sol;
}

CatenaryCase to_catenary_case(const LineProperties& props, const BoundaryJoint& start,
                              const BoundaryJoint& end, Convention convention) {
  auto unsupported = [](const std::string& why) {
    return SolverError(ErrorKind::UnsupportedCase, why);
  };
  auto map = [&](const BoundaryJoint& joint) -> planar::Joint {
    if (const auto* j = std::get_if<Spherical>(&joint)) {
      if (j->anchor.y() != 0.0) throw unsupported("anchor must lie in the y = 0 plane");
      return planar::Ball{j->anchor.x(), j->anchor.z()};
    }
    if (const auto* j = std::get_if<ImposedForce>(&joint)) {
      if (j->force.y() != 0.0) throw unsupported("force must have no y component");
      return planar::Force{j->force.x(), j->force.z()};
    }
    if (const auto* j = std::get_if<Spring>(&joint)) {
      if (j->ref_point.y() != 0.0) throw unsupported("spring reference must lie in y = 0");
      return planar::Spring{j->stiffness, j->ref_point.x(), j->ref_point.z()};
    }
    if (const auto* j = std::get_if<LinearAnnular>(&joint)) {
      if (axis_index(j->axis) != kX) throw unsupported("linear annular axis must be x");
      if (j->transverse_position[0] != 0.0) throw unsupported("linear annular must have y = 0");
      return planar::Annular{j->axial_force * j->axis.x(), j->transverse_position[1]};
    }
    if (const auto* j = std::get_if<SpringLinearAnnular>(&joint)) {
      if (axis_index(j->axis) != kX) throw unsupported("spring linear annular axis must be x");
      if (j->transverse_position[0] != 0.0) throw unsupported("spring linear annular must have y = 0");
      return planar::SpringAnnular{j->stiffness, j->ref_point.x(), j->transverse_position[1]};
    }
    throw unsupported("no closed form for a " + std::string(joint_type_name(joint)) + " joint");
  };

  CatenaryCase c;
  c.props = props;
  c.convention = convention;
  c.start = map(start);
  c.end = map(end);
  return c;
}

}  // namespace mooring
