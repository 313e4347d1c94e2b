#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "mooring/boundary.hpp"
#include "mooring/shoot.hpp"
#include "mooring/verify.hpp"

namespace mooring {

// Case files are JSON documents, SI units throughout:
//
//   {
//     "properties": {"length_rest": 50, "young_modulus": 2.11e11,
//                    "cross_area": 3.1426e-4, "density_material": 7850,
//                    "density_fluid": 1025, "gravity": 9.81},
//     "load": {"type": "buoyant_weight"},
//     "joint_start": {"type": "spherical", "anchor": [0, 0, 0]},
//     "joint_end": {"type": "spring", "stiffness": 1e4, "ref_point": [25, 0, 0]},
//     "convention": "I",
//     "solver": {"newton_tol": 1e-8, "newton_max_iter": 50,
//                "rkf45_abs_tol": 1e-8, "guess_c": 10, "position_guess": [25, 0, 0]}
//   }
//
// Joint types and their keys:
//   spherical              anchor
//   imposed_force          force
//   spring                 stiffness, ref_point
//   linear_annular         axis, axial_force, transverse_position
//   spring_linear_annular  axis, stiffness, ref_point, transverse_position
//   punctual               normal, offset, in_plane_force
// A custom load is {"type": "custom", "table": [{"s_begin": 0, "s_end": 10,
// "force": [fx, fy, fz]}, ...]} with piecewise-constant force per length.
// "gravity", "solver" and every solver key are optional; unknown keys are
// rejected.

class CaseFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadSpec {
  enum class Kind { BuoyantWeight, Custom };
  Kind kind = Kind::BuoyantWeight;
  std::vector<LoadInterval> table;

  bool operator==(const LoadSpec&) const = default;
};

struct SolverSpec {
  double newton_tol = 1e-8;
  int newton_max_iter = 50;
  double rkf45_abs_tol = 1e-8;
  double guess_c = 10.0;
  std::optional<Vec3> position_guess;

  bool operator==(const SolverSpec&) const = default;
};

struct CaseDefinition {
  LineProperties props;
  LoadSpec load;
  BoundaryJoint joint_start = Spherical{};
  BoundaryJoint joint_end = Spherical{};
  Convention convention = Convention::I;
  SolverSpec solver;

  bool operator==(const CaseDefinition&) const = default;
};

CaseDefinition parse_case(const nlohmann::json& doc);
CaseDefinition parse_case_text(const std::string& text);
nlohmann::json case_to_json(const CaseDefinition& def);

ShootingProblem to_problem(const CaseDefinition& def);

/// Planar oracle for the definition; requires the buoyant weight load.
CatenaryCase to_oracle_case(const CaseDefinition& def);

/// Case file for one catalog configuration.
CaseDefinition catalog_case(const CaseId& id, const CatalogSettings& settings = {});

}  // namespace mooring
