#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "mooring/case_file.hpp"
#include "mooring/errors.hpp"
#include "mooring/profile.hpp"
#include "mooring/verify.hpp"

namespace mooring::cli {

namespace {

struct Overrides {
  std::optional<double> tol_newton;
  std::optional<double> tol_rkf45;
  std::optional<double> guess_c;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << content;
  if (!os) throw IoError("failed writing '" + path + "'");
}

bool is_definition_error(ErrorKind kind) {
  return kind == ErrorKind::InvalidInput || kind == ErrorKind::NonAxisAligned ||
         kind == ErrorKind::UnsupportedCase;
}

void apply(const Overrides& o, CaseDefinition& def) {
  if (o.tol_newton) def.solver.newton_tol = *o.tol_newton;
  if (o.tol_rkf45) def.solver.rkf45_abs_tol = *o.tol_rkf45;
  if (o.guess_c) def.solver.guess_c = *o.guess_c;
}

std::string sci(double v) {
  std::ostringstream ss;
  ss << std::scientific << std::setprecision(2) << v;
  return ss.str();
}

int cmd_solve(const std::string& case_path, const std::string& out_path, const Overrides& o,
              std::ostream& out, std::ostream& err) {
  CaseDefinition def;
  try {
    def = parse_case_text(read_file(case_path));
    apply(o, def);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const CaseFileError& e) {
    err << "error: " << case_path << ": " << e.what() << '\n';
    return kParseError;
  }

  std::ostringstream trace;
  ShootingSolution sol;
  try {
    ShootingProblem problem = to_problem(def);
    problem.newton.observer = [&trace](const NewtonIterate& it) {
      trace << "  iter " << it.iteration << ": ||C|| = " << sci(it.residual_norm)
            << ", step " << it.step_length << ", u = (" << format_double(it.u[0]) << ", "
            << format_double(it.u[1]) << ", " << format_double(it.u[2]) << ")\n";
    };
    sol = solve(problem);
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    if (is_definition_error(e.kind())) return kParseError;
    err << "Newton trace:\n" << trace.str();
    return kSolveFailed;
  }

  try {
    std::ostringstream csv;
    write_profile(csv, profile_rows(sol.trajectory));
    write_file(out_path, csv.str());
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  out << "converged: " << sol.newton_iterations << " Newton iterations, ||C||_inf = "
      << sci(sol.residual_norm) << ", " << sol.trajectory.size() << " samples\n";
  return kOk;
}

int cmd_oracle(const std::string& case_path, const std::string& out_path, int samples,
               const Overrides& o, std::ostream& out, std::ostream& err) {
  CaseDefinition def;
  CatenaryCase oracle_case;
  try {
    def = parse_case_text(read_file(case_path));
    apply(o, def);
    oracle_case = to_oracle_case(def);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const CaseFileError& e) {
    err << "error: " << case_path << ": " << e.what() << '\n';
    return kParseError;
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  CatenarySolution sol;
  try {
    sol = semi_analytic_solve(oracle_case);
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return kSolveFailed;
  }

  try {
    std::ostringstream csv;
    write_profile(csv, oracle_rows(sol.params, def.props, samples));
    write_file(out_path, csv.str());
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  out << "closed form: N_x0 = " << format_double(sol.params.n_x0)
      << ", N_z0 = " << format_double(sol.params.n_z0) << ", x_A = " << format_double(sol.params.x_a)
      << ", z_A = " << format_double(sol.params.z_a) << " (" << sol.iterations
      << " iterations, residual " << sci(sol.residual_norm) << ")\n";
  return kOk;
}

int cmd_validate(const std::string& out_path, const Overrides& o, bool timings, std::ostream& out,
                 std::ostream& err) {
  CatalogSettings settings;
  if (o.tol_newton) settings.newton_tol = *o.tol_newton;
  if (o.tol_rkf45) settings.rkf45_tol = *o.tol_rkf45;
  if (o.guess_c) settings.guess_c = *o.guess_c;

  const ErrorReport report = run_validation(build_catalog(settings), settings);
  constexpr double gate = 1e-8;

  out << "case   iters  initial(x z n_x n_z)                  final(x z n_x n_z)"
         "                    segment max(x z n_x n_z)\n";
  for (const auto& c : report.cases) {
    out << std::left << std::setw(7) << c.id.name();
    if (!c.ok) {
      out << "FAILED: " << c.failure << '\n';
      continue;
    }
    out << std::setw(7) << c.newton_iterations;
    for (const auto& v : c.initial_end) out << std::setw(10) << (v ? sci(*v) : std::string("-"));
    for (double v : c.final_end) out << std::setw(10) << sci(v);
    for (double v : c.segment_max) out << std::setw(10) << sci(v);
    out << '\n';
  }
  const bool passed = report.passes(gate);
  out << (passed ? "PASS" : "FAIL") << ": all errors <= " << sci(gate) << '\n';

  if (!out_path.empty()) {
    try {
      write_file(out_path, report_to_json(report, timings, gate).dump(2) + "\n");
    } catch (const IoError& e) {
      err << "error: " << e.what() << '\n';
      return kIoError;
    }
  }
  return passed ? kOk : kSolveFailed;
}

int cmd_example(const std::string& name, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
  const auto id = parse_case_id(name);
  if (!id) {
    err << "error: unknown case '" << name << "' (expected I-a ... II-e)\n";
    return kParseError;
  }
  try {
    write_file(out_path, case_to_json(catalog_case(*id)).dump(2) + "\n");
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  out << "wrote " << id->name() << " to " << out_path << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Static solver for elastic strings by single shooting", "mooring"};
  app.require_subcommand(1);

  Overrides o;
  std::string case_path, out_path, case_name;
  int samples = 101;
  bool timings = false;

  auto add_overrides = [&o](CLI::App* sub) {
    sub->add_option("--tol-newton", o.tol_newton, "Newton stop tolerance on ||C||_inf")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-rkf45", o.tol_rkf45, "RKF45 absolute error per step")
        ->check(CLI::PositiveNumber);
    sub->add_option("--guess-c", o.guess_c, "first guess ratio omega L / |n|")
        ->check(CLI::PositiveNumber);
  };

  auto* solve_cmd = app.add_subcommand("solve", "Solve a case file by shooting and write the profile");
  solve_cmd->add_option("case", case_path, "case file (JSON)")->required();
  solve_cmd->add_option("--out", out_path, "profile output (CSV)")->required();
  add_overrides(solve_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Sample the closed-form catenary of a case file");
  oracle_cmd->add_option("case", case_path, "case file (JSON)")->required();
  oracle_cmd->add_option("--out", out_path, "profile output (CSV)")->required();
  oracle_cmd->add_option("--samples", samples, "number of uniform samples")
      ->check(CLI::Range(2, 10'000'000));
  add_overrides(oracle_cmd);

  auto* validate_cmd = app.add_subcommand("validate", "Run the ten-case validation against the closed form");
  validate_cmd->add_option("--out", out_path, "report output (JSON)");
  validate_cmd->add_flag("--timings", timings, "include per-case runtimes in the report");
  add_overrides(validate_cmd);

  auto* example_cmd = app.add_subcommand("example", "Write the case file of a catalog configuration");
  example_cmd->add_option("case", case_name, "configuration, I-a ... II-e")->required();
  example_cmd->add_option("--out", out_path, "case file output (JSON)")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  if (solve_cmd->parsed()) return cmd_solve(case_path, out_path, o, out, err);
  if (oracle_cmd->parsed()) return cmd_oracle(case_path, out_path, samples, o, out, err);
  if (validate_cmd->parsed()) return cmd_validate(out_path, o, timings, out, err);
  return cmd_example(case_name, out_path, out, err);
}

}  // namespace mooring::cli
