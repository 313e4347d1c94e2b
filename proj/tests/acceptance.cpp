// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "mooring/errors.hpp"
#include "mooring/shoot.hpp"
#include "mooring/verify.hpp"

using namespace mooring;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string& what, const std::string& measured) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), measured.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Cubic Hermite evaluation of the trajectory at s, with exact slopes from the ODE.
StateVector hermite_at(const Trajectory& t, double s, const ShootingProblem& p) {
  const auto& smp = t.samples;
  auto it = std::upper_bound(smp.begin(), smp.end(), s,
                             [](double v, const TrajectorySample& x) { return v < x.s; });
  std::size_t i = it == smp.begin() ? 0 : static_cast<std::size_t>(it - smp.begin()) - 1;
  if (i + 1 >= smp.size()) i = smp.size() - 2;
  const auto& a = smp[i];
  const auto& b = smp[i + 1];
  const double h = b.s - a.s;
  const double u = (s - a.s) / h;
  const Vec6 ya = a.state.packed(), yb = b.state.packed();
  const Vec6 da = state_derivative(a.state, a.s, p.load, p.props);
  const Vec6 db = state_derivative(b.state, b.s, p.load, p.props);
  const double h00 = (1 + 2 * u) * (1 - u) * (1 - u), h10 = u * (1 - u) * (1 - u);
  const double h01 = u * u * (3 - 2 * u), h11 = u * u * (u - 1);
  return StateVector::unpack(h00 * ya + h10 * h * da + h01 * yb + h11 * h * db);
}

}  // namespace

int main() {
  const CatalogSettings settings;
  const auto catalog = build_catalog(settings);
  const ErrorReport report = run_validation(catalog, settings);
  const LineProperties props = reference_line();
  const double length = props.length_rest;
  const double omega = relative_weight(props);
  const double ea = props.axial_stiffness();

  // 1. Ten-case validation gate.
  {
    double worst = 0.0, slowest = 0.0;
    bool all_ok = report.cases.size() == 10;
    for (const auto& c : report.cases) {
      all_ok = all_ok && c.ok;
      worst = std::max(worst, c.max_error());
      slowest = std::max(slowest, c.runtime_ms);
    }
    verdict(1, all_ok && worst <= 1e-8 && slowest < 1000.0, "ten-case validation gate <= 1e-8",
           fmt("max error %.3e", worst) + fmt(", slowest case %.2f ms", slowest));
  }

  // 2. Oracle self-consistency.
  {
    double worst_res = 0.0, worst_step = 0.0;
    bool all_ok = true;
    for (const auto& c : report.cases) {
      if (!c.oracle) {
        all_ok = false;
        continue;
      }
      worst_res = std::max(worst_res, c.oracle->residual_norm / std::max(std::abs(omega) * length, 1.0));
      worst_step = std::max(worst_step, c.oracle->last_relative_step);
    }
    verdict(2, all_ok && worst_res <= 1e-9 && worst_step <= 1e-12, "closed-form oracle self-consistency",
           fmt("residual/max(wL,1) %.3e", worst_res) + fmt(", last relative step %.3e", worst_step));
  }

  // 3. ODE structural invariants.
  {
    double tangency = 0.0, stretch = 0.0, balance = 0.0;
    bool all_ok = true;
    for (std::size_t k = 0; k < catalog.size(); ++k) {
      const auto& c = report.cases[k];
      if (!c.solution) {
        all_ok = false;
        continue;
      }
      const auto& p = catalog[k].problem;
      const Trajectory& t = c.solution->trajectory;
      for (const auto& smp : t.samples) {
        const Vec3 dr = state_derivative(smp.state, smp.s, p.load, p.props).head<3>();
        const Vec3& n = smp.state.tension;
        tangency = std::max(tangency, dr.cross(n).norm() / (dr.norm() * n.norm()));
        stretch = std::max(stretch, std::abs(dr.norm() - (1.0 + n.norm() / ea)));
      }
      const Vec3 jump = t.back().state.tension - t.front().state.tension - Vec3(0, 0, omega * length);
      balance = std::max(balance, jump.cwiseAbs().maxCoeff());
    }
    verdict(3, all_ok && tangency <= 1e-12 && stretch <= 1e-12 && balance <= 1e-7,
           "tangency, stretch and tension balance on every trajectory",
           fmt("tangency %.2e", tangency) + fmt(", stretch %.2e", stretch) + fmt(", balance %.2e N", balance));
  }

  // 4. Convention invariance: II at s against I at L - s (same material point).
  {
    double pos = 0.0, tension = 0.0;
    bool all_ok = true;
    for (std::size_t k = 0; k < 5; ++k) {
      const auto& one = report.cases[k];
      const auto& two = report.cases[k + 5];
      if (!one.solution || !two.solution) {
        all_ok = false;
        continue;
      }
      for (const auto& smp : two.solution->trajectory.samples) {
        const StateVector m = hermite_at(one.solution->trajectory, length - smp.s, catalog[k].problem);
        pos = std::max(pos, (m.position - smp.state.position).norm());
        tension = std::max(tension, std::abs(m.tension.norm() - smp.state.tension.norm()));
      }
    }
    verdict(4, all_ok && pos <= 1e-6 * length && tension <= 1e-6 * omega * length,
           "convention I and II agree as point sets",
           fmt("position %.3e m", pos) + fmt(" (limit %.1e)", 1e-6 * length) + fmt(", tension %.3e N", tension) +
               fmt(" (limit %.2e)", 1e-6 * omega * length));
  }

  // 5. Zero-load spherical-to-force straight line.
  {
    ShootingProblem p;
    p.props = props;
    p.joint_start = Spherical{Vec3::Zero()};
    const Vec3 force(3000.0, -1200.0, 4000.0);
    p.joint_end = ImposedForce{force};
    p.integrator = IntegratorSettings::for_length(length);
    double pos_err = 1.0, ten_err = 1.0;
    try {
      const ShootingSolution s = solve(p);
      const Vec3 exact_end = length * (1.0 + force.norm() / ea) * force.normalized();
      pos_err = 0.0;
      ten_err = 0.0;
      for (const auto& smp : s.trajectory.samples) {
        const Vec3 exact = smp.s / length * exact_end;
        pos_err = std::max(pos_err, (smp.state.position - exact).norm() / exact_end.norm());
        ten_err = std::max(ten_err, (smp.state.tension - force).norm() / force.norm());
      }
    } catch (const SolverError& e) {
      std::printf("  solve failed: %s\n", e.what());
    }
    verdict(5, pos_err <= 1e-12 && ten_err <= 1e-12, "zero-load taut line matches closed form",
           fmt("position %.2e", pos_err) + fmt(", tension %.2e (relative)", ten_err));
  }

  // 6. Planarity.
  {
    double y = 0.0, ny = 0.0;
    for (const auto& c : report.cases) {
      y = std::max(y, c.max_out_of_plane_position);
      ny = std::max(ny, c.max_out_of_plane_tension);
    }
    verdict(6, y <= 1e-10 && ny <= 1e-10, "planarity of the 3D solves",
           fmt("max |y| %.2e m", y) + fmt(", max |n_y| %.2e N", ny));
  }

  // 7. Newton behaviour from the default guess.
  {
    int iters = 0;
    double res = 0.0;
    bool all_ok = true;
    for (const auto& c : report.cases) {
      all_ok = all_ok && c.ok;
      iters = std::max(iters, c.newton_iterations);
      res = std::max(res, c.residual_norm);
    }
    verdict(7, all_ok && iters <= 25 && res <= 1e-8, "Newton converges from the default guess",
           "max iterations " + std::to_string(iters) + fmt(", max ||C|| %.2e", res));
  }

  // 8. Tolerance sensitivity on I-a.
  {
    std::vector<double> errs;
    for (double tol : {1e-6, 1e-8, 1e-10}) {
      CatalogSettings s;
      s.rkf45_tol = tol;
      const CaseReport c = run_case(build_catalog(s).front());
      errs.push_back(c.ok ? *std::max_element(c.segment_max.begin(), c.segment_max.end()) : 1.0);
    }
    verdict(8, errs[0] > errs[1] && errs[1] > errs[2], "I-a error decreases as the RKF45 tolerance tightens",
           fmt("%.3e", errs[0]) + fmt(" > %.3e", errs[1]) + fmt(" > %.3e", errs[2]));
  }

  return failures == 0 ? 0 : 1;
}
