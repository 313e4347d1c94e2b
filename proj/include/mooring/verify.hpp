#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "mooring/catenary.hpp"
#include "mooring/shoot.hpp"

namespace mooring {

enum class BcType { a, b, c, d, e };

struct CaseId {
  Convention convention = Convention::I;
  BcType bc = BcType::a;

  std::string name() const;  // e.g. "I-a"
  bool operator==(const CaseId&) const = default;
};

std::optional<CaseId> parse_case_id(const std::string& name);

/// Error fields reported per end and along the line, in this order.
enum Field : int { kFieldX = 0, kFieldZ, kFieldNx, kFieldNz };
inline constexpr std::array<const char*, 4> kFieldNames = {"x", "z", "n_x", "n_z"};

using FieldErrors = std::array<double, 4>;

/// Reference line and joint data shared by the validation catalog.
struct CatalogSettings {
  double newton_tol = 1e-8;
  double rkf45_tol = 1e-8;
  double spring_stiffness = 1e4;  // N/m
  double force_ratio_c = 10.0;    // omega L / F_x for the force and annular cases
  double guess_c = 10.0;
};

LineProperties reference_line();

struct CatalogEntry {
  CaseId id;
  ShootingProblem problem;
  CatenaryCase oracle_case;
};

/// The ten configurations: spherical left end at the origin, right end (a)
/// spherical, (b) force, (c) spring, (d) linear annular, (e) spring linear
/// annular; convention I starts on the left ball, II on the right joint.
std::vector<CatalogEntry> build_catalog(const CatalogSettings& settings = {});

/// Max over trajectory samples of |field - exact| / scale, scale L for
/// positions and omega L for tensions.
FieldErrors dimensionless_errors(const Trajectory& traj, const CatenaryParameters& oracle,
                                 const LineProperties& props);

/// Error of one sample against the oracle, same scaling.
FieldErrors point_errors(const TrajectorySample& sample, const CatenaryParameters& oracle,
                         const LineProperties& props);

struct CaseReport {
  CaseId id;
  bool ok = false;
  std::string failure;

  // Fields imposed as constants at the start are absent.
  std::array<std::optional<double>, 4> initial_end{};
  FieldErrors final_end{};
  FieldErrors segment_max{};
  double max_out_of_plane_position = 0.0;  // max |y|, m
  double max_out_of_plane_tension = 0.0;   // max |n_y|, N

  int newton_iterations = 0;
  double residual_norm = 0.0;
  double oracle_residual = 0.0;
  double oracle_relative_step = 0.0;
  double runtime_ms = 0.0;

  std::optional<ShootingSolution> solution;
  std::optional<CatenarySolution> oracle;

  /// Largest error in any of the three tables.
  double max_error() const;
};

struct ErrorReport {
  CatalogSettings settings;
  std::vector<CaseReport> cases;

  bool passes(double gate = 1e-8) const;
};

/// Which of x, z, n_x, n_z are imposed as constants at the start joint.
std::array<bool, 4> imposed_at_start(const BoundaryJoint& joint_start);

CaseReport run_case(const CatalogEntry& entry);
ErrorReport run_validation(const std::vector<CatalogEntry>& catalog,
                           const CatalogSettings& settings = {});

/// Report as JSON with sections initial_end, final_end and segment_max.
/// Timings are only included when requested so files stay byte-stable.
nlohmann::json report_to_json(const ErrorReport& report, bool include_timings = false,
                              double gate = 1e-8);

}  // namespace mooring
