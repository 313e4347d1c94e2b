#pragma once

#include <optional>
#include <variant>

#include "mooring/boundary.hpp"
#include "mooring/model.hpp"

namespace mooring {

// Planar (x-z) joints understood by the closed-form elastic catenary.
namespace planar {

struct Ball {
  double x = 0.0, z = 0.0;
};
struct Force {
  double f_x = 0.0, f_z = 0.0;
};
struct Spring {
  double stiffness = 0.0, a_x = 0.0, a_z = 0.0;
};
/// Slides along x under a constant horizontal force, z fixed.
struct Annular {
  double f_x = 0.0, z = 0.0;
};
/// Slides along x restrained by a horizontal spring, z fixed.
struct SpringAnnular {
  double stiffness = 0.0, a_x = 0.0, z = 0.0;
};

using Joint = std::variant<Ball, Force, Spring, Annular, SpringAnnular>;

}  // namespace planar

/// Closed-form unknowns: local tensions at s = 0 and the global start point.
struct CatenaryParameters {
  double n_x0 = 0.0;
  double n_z0 = 0.0;
  double x_a = 0.0;
  double z_a = 0.0;
  Convention convention = Convention::I;
};

struct CatenaryCase {
  LineProperties props;
  Convention convention = Convention::I;
  planar::Joint start = planar::Ball{};
  planar::Joint end = planar::Ball{};
  double guess_c = 10.0;
  std::optional<Vec2> position_guess;  // (x, z) of the start point
};

struct LocalShape {
  double X = 0.0, Z = 0.0;
};
struct LocalTension {
  double N_x = 0.0, N_z = 0.0;
};
struct GlobalFields {
  double x = 0.0, z = 0.0, n_x = 0.0, n_z = 0.0;
};

/// Elastic catenary displacements from the start point in the local frame.
/// Any sign of N_x0 is accepted (the curve runs along sign(N_x0) X); a zero
/// weight uses the exact taut straight line. Throws ZeroHorizontalTension
/// when N_x0 == 0 and the weight is non-zero, SingularTension when the
/// straight line carries no tension.
LocalShape local_shape(double s, const CatenaryParameters& params, const LineProperties& props);

LocalTension local_tension(double s, const CatenaryParameters& params, const LineProperties& props);

/// Global fields: x = x_a +/- X, z = z_a + Z, n_x = +/- N_x, n_z = N_z with
/// the upper sign for convention I.
GlobalFields to_global(double s, const CatenaryParameters& params, const LineProperties& props);

/// Full parameter set from the two solver unknowns, using the start joint
/// to supply the other two.
CatenaryParameters parameters_from_unknowns(const CatenaryCase& c, const Vec2& unknowns);

/// End-joint constraints evaluated at s = L. Row order per end joint type:
/// ball (x, z); force (n_x, n_z); spring (n_x, n_z); annular and
/// spring-annular (n_x, z).
Vec2 case_constraints(const CatenaryCase& c, const CatenaryParameters& params);

struct CatenarySolution {
  CatenaryParameters params;
  Vec2 unknowns = Vec2::Zero();
  double residual_norm = 0.0;      // max-norm of case_constraints, raw units
  double last_relative_step = 0.0;
  int iterations = 0;
};

Vec2 oracle_default_guess(const CatenaryCase& c);

/// Damped 2x2 Newton on case_constraints, stopped once the relative update
/// falls to 1e-12; the raw residual must then be <= 1e-9 max(omega L, 1).
CatenarySolution semi_analytic_solve(const CatenaryCase& c);

/// Planar image of a 3D shooting setup. Throws UnsupportedCase for joints
/// the closed form cannot represent (out-of-plane data, punctual joints,
/// axes other than x).
CatenaryCase to_catenary_case(const LineProperties& props, const BoundaryJoint& start,
                              const BoundaryJoint& end, Convention convention);

}  // namespace mooring
