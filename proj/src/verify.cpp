#include "mooring/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "mooring/errors.hpp"

namespace mooring {

namespace {

constexpr std::array<BcType, 5> kAllBc = {BcType::a, BcType::b, BcType::c, BcType::d, BcType::e};

char bc_letter(BcType bc) { return static_cast<char>('a' + static_cast<int>(bc)); }

FieldErrors errors_of(const GlobalFields& exact, const StateVector& st, double length,
                      double weight) {
  return {std::abs(st.position.x() - exact.x) / length, std::abs(st.position.z() - exact.z) / length,
          std::abs(st.tension.x() - exact.n_x) / weight, std::abs(st.tension.z() - exact.n_z) / weight};
}

double weight_scale(const LineProperties& props) {
  const double wl = std::abs(relative_weight(props)) * props.length_rest;
  return wl > 0.0 ? wl : 1.0;
}

}  // namespace

std::string CaseId::name() const {
  return std::string(convention == Convention::I ? "I" : "II") + "-" + bc_letter(bc);
}

std::optional<CaseId> parse_case_id(const std::string& name) {
  for (Convention conv : {Convention::I, Convention::II}) {
    for (BcType bc : kAllBc) {
      const CaseId id{conv, bc};
      if (id.name() == name) return id;
    }
  }
  return std::nullopt;
}

LineProperties reference_line() {
  LineProperties p;
  p.length_rest = 50.0;
  p.young_modulus = 2.11e11;
  p.cross_area = 3.1426e-4;
  p.density_material = 7.850e3;
  p.density_fluid = 1.025e3;
  p.gravity = kDefaultGravity;
  return p;
}

std::vector<CatalogEntry> build_catalog(const CatalogSettings& settings) {
  const LineProperties props = reference_line();
  const double length = props.length_rest;
  const double force = relative_weight(props) * length / settings.force_ratio_c;
  const double k = settings.spring_stiffness;
  const Vec3 left(0.0, 0.0, 0.0);
  const Vec3 right(25.0, 0.0, 0.0);  // x_F, z_F and the spring reference point

  auto right_joint = [&](BcType bc) -> BoundaryJoint {
    switch (bc) {
      case BcType::a: return Spherical{right};
      case BcType::b: return ImposedForce{Vec3(force, 0.0, 0.0)};
      case BcType::c: return Spring{k, right};
      case BcType::d: return LinearAnnular{Vec3::UnitX(), force, Vec2(right.y(), right.z())};
      case BcType::e:
        return SpringLinearAnnular{Vec3::UnitX(), k, right, Vec2(right.y(), right.z())};
    }
    return Spherical{right};
  };

  std::vector<CatalogEntry> out;
  for (Convention conv : {Convention::I, Convention::II}) {
    for (BcType bc : kAllBc) {
      CatalogEntry e;
      e.id = {conv, bc};
      ShootingProblem& p = e.problem;
      p.props = props;
      p.load = buoyant_weight_load(props);
      p.integrator = IntegratorSettings::for_length(length, settings.rkf45_tol);
      p.newton.tol = settings.newton_tol;
      p.convention = conv;
      p.guess_c = settings.guess_c;
      if (conv == Convention::I) {
        p.joint_start = Spherical{left};
        p.joint_end = right_joint(bc);
      } else {
        p.joint_start = right_joint(bc);
        p.joint_end = Spherical{left};
        // Unknown start positions are seeded at r_F.
        if (bc == BcType::b || bc == BcType::d || bc == BcType::e) p.position_guess = right;
      }
      e.oracle_case = to_catenary_case(props, p.joint_start, p.joint_end, conv);
      e.oracle_case.guess_c = settings.guess_c;
      if (p.position_guess) e.oracle_case.position_guess = Vec2(p.position_guess->x(), p.position_guess->z());
      out.push_back(std::move(e));
    }
  }
  return out;
}

FieldErrors point_errors(const TrajectorySample& sample, const CatenaryParameters& oracle,
                         const LineProperties& props) {
  return errors_of(to_global(sample.s, oracle, props), sample.state, props.length_rest,
                   weight_scale(props));
}

FieldErrors dimensionless_errors(const Trajectory& traj, const CatenaryParameters& oracle,
                                 const LineProperties& props) {
  FieldErrors worst{};
  for (const auto& sample : traj.samples) {
    const FieldErrors e = point_errors(sample, oracle, props);
    for (int f = 0; f < 4; ++f) worst[f] = std::max(worst[f], e[f]);
  }
  return worst;
}

std::array<bool, 4> imposed_at_start(const BoundaryJoint& joint_start) {
  const Partition part = partition(joint_start);
  return {part.is_constrained(kX), part.is_constrained(kZ), force_is_constant(joint_start, kNx),
          force_is_constant(joint_start, kNz)};
}

double CaseReport::max_error() const {
  double m = 0.0;
  for (const auto& v : initial_end) {
    if (v) m = std::max(m, *v);
  }
  for (double v : final_end) m = std::max(m, v);
  for (double v : segment_max) m = std::max(m, v);
  return m;
}

CaseReport run_case(const CatalogEntry& entry) {
  CaseReport rep;
  rep.id = entry.id;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const LineProperties& props = entry.problem.props;
    CatenarySolution oracle = semi_analytic_solve(entry.oracle_case);
    ShootingSolution sol = solve(entry.problem);

    const Trajectory& traj = sol.trajectory;
    const FieldErrors start = point_errors(traj.front(), oracle.params, props);
    const auto imposed = imposed_at_start(entry.problem.joint_start);
    for (int f = 0; f < 4; ++f) {
      if (!imposed[f]) rep.initial_end[f] = start[f];
    }
    rep.final_end = point_errors(traj.back(), oracle.params, props);
    rep.segment_max = dimensionless_errors(traj, oracle.params, props);
    for (const auto& s : traj.samples) {
      rep.max_out_of_plane_position = std::max(rep.max_out_of_plane_position, std::abs(s.state.position.y()));
      rep.max_out_of_plane_tension = std::max(rep.max_out_of_plane_tension, std::abs(s.state.tension.y()));
    }
    rep.newton_iterations = sol.newton_iterations;
    rep.residual_norm = sol.residual_norm;
    rep.oracle_residual = oracle.residual_norm;
    rep.oracle_relative_step = oracle.last_relative_step;
    rep.solution = std::move(sol);
    rep.oracle = std::move(oracle);
    rep.ok = true;
  } catch (const std::exception& e) {
    rep.ok = false;
    rep.failure = e.what();
  }
  rep.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

ErrorReport run_validation(const std::vector<CatalogEntry>& catalog, const CatalogSettings& settings) {
  ErrorReport report;
  report.settings = settings;
  report.cases.reserve(catalog.size());
  for (const auto& entry : catalog) report.cases.push_back(run_case(entry));
  return report;
}

bool ErrorReport::passes(double gate) const {
  if (cases.empty()) return false;
  return std::all_of(cases.begin(), cases.end(),
                     [gate](const CaseReport& c) { return c.ok && c.max_error() <= gate; });
}

nlohmann::json report_to_json(const ErrorReport& report, bool include_timings, double gate) {
  using nlohmann::json;
  json out;
  out["gate"] = gate;
  out["passed"] = report.passes(gate);
  out["settings"] = {{"newton_tol", report.settings.newton_tol},
                     {"rkf45_abs_tol", report.settings.rkf45_tol},
                     {"spring_stiffness", report.settings.spring_stiffness},
                     {"force_ratio_c", report.settings.force_ratio_c},
                     {"guess_c", report.settings.guess_c}};

  json initial = json::array(), final_end = json::array(), segment = json::array(),
       cases = json::array();
  for (const auto& c : report.cases) {
    json row_i = {{"case", c.id.name()}}, row_f = row_i, row_s = row_i;
    for (int f = 0; f < 4; ++f) {
      const char* name = kFieldNames[f];
      row_i[name] = (c.ok && c.initial_end[f]) ? json(*c.initial_end[f]) : json(nullptr);
      row_f[name] = c.ok ? json(c.final_end[f]) : json(nullptr);
      row_s[name] = c.ok ? json(c.segment_max[f]) : json(nullptr);
    }
    initial.push_back(row_i);
    final_end.push_back(row_f);
    segment.push_back(row_s);

    json info = {{"case", c.id.name()}, {"status", c.ok ? "ok" : "failed"}};
    if (c.ok) {
      info["newton_iterations"] = c.newton_iterations;
      info["residual_norm"] = c.residual_norm;
      info["oracle_residual"] = c.oracle_residual;
      info["max_abs_y"] = c.max_out_of_plane_position;
      info["max_abs_n_y"] = c.max_out_of_plane_tension;
      info["samples"] = c.solution ? c.solution->trajectory.size() : 0;
    } else {
      info["failure"] = c.failure;
    }
    if (include_timings) info["runtime_ms"] = c.runtime_ms;
    cases.push_back(info);
  }
  out["initial_end"] = initial;
  out["final_end"] = final_end;
  out["segment_max"] = segment;
  out["cases"] = cases;
  return out;
}

}  // namespace mooring
