#include "mooring/case_file.hpp"

#include <cmath>
#include <initializer_list>
#include <set>

#include "mooring/errors.hpp"

namespace mooring {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Reads one JSON object, rejecting keys outside `allowed`.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string path, std::initializer_list<const char*> allowed)
      : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) fail("expected an object");
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& item : obj_.items()) {
      if (!keys.count(item.key())) {
        throw CaseFileError("unknown key '" + item.key() + "' in " + path_);
      }
    }
  }

  bool has(const char* key) const { return obj_.contains(key); }

  const json& at(const char* key) const {
    if (!obj_.contains(key)) throw CaseFileError("missing key '" + std::string(key) + "' in " + path_);
    return obj_.at(key);
  }

  double number(const char* key) const { return to_number(at(key), where(key)); }

  double number_or(const char* key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  int integer_or(const char* key, int fallback) const {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_number_integer()) throw CaseFileError(where(key) + ": expected an integer");
    return v.get<int>();
  }

  std::string string(const char* key) const {
    const json& v = at(key);
    if (!v.is_string()) throw CaseFileError(where(key) + ": expected a string");
    return v.get<std::string>();
  }

  Vec3 vec3(const char* key) const { return vec<3>(key); }
  Vec2 vec2(const char* key) const { return vec<2>(key); }

  std::string where(const char* key) const { return path_ + "." + key; }

  [[noreturn]] void fail(const std::string& msg) const { throw CaseFileError(path_ + ": " + msg); }

  static double to_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw CaseFileError(where + ": expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw CaseFileError(where + ": value must be finite");
    return d;
  }

 private:
  template <int N>
  Eigen::Matrix<double, N, 1> vec(const char* key) const {
    const json& v = at(key);
    if (!v.is_array() || v.size() != N) {
      throw CaseFileError(where(key) + ": expected an array of " + std::to_string(N) + " numbers");
    }
    Eigen::Matrix<double, N, 1> out;
    for (int i = 0; i < N; ++i) out[i] = to_number(v[i], where(key));
    return out;
  }

  const json& obj_;
  std::string path_;
};

json to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }
json to_json(const Vec2& v) { return json::array({v.x(), v.y()}); }

BoundaryJoint parse_joint(const json& doc, const std::string& path) {
  if (!doc.is_object() || !doc.contains("type") || !doc.at("type").is_string()) {
    throw CaseFileError(path + ": joint needs a string 'type'");
  }
  const std::string type = doc.at("type").get<std::string>();
  if (type == "spherical") {
    ObjectReader r(doc, path, {"type", "anchor"});
    return Spherical{r.vec3("anchor")};
  }
  if (type == "imposed_force") {
    ObjectReader r(doc, path, {"type", "force"});
    return ImposedForce{r.vec3("force")};
  }
  if (type == "spring") {
    ObjectReader r(doc, path, {"type", "stiffness", "ref_point"});
    return Spring{r.number("stiffness"), r.vec3("ref_point")};
  }
  if (type == "linear_annular") {
    ObjectReader r(doc, path, {"type", "axis", "axial_force", "transverse_position"});
    return LinearAnnular{r.vec3("axis"), r.number("axial_force"), r.vec2("transverse_position")};
  }
  if (type == "spring_linear_annular") {
    ObjectReader r(doc, path, {"type", "axis", "stiffness", "ref_point", "transverse_position"});
    return SpringLinearAnnular{r.vec3("axis"), r.number("stiffness"), r.vec3("ref_point"),
                               r.vec2("transverse_position")};
  }
  if (type == "punctual") {
    ObjectReader r(doc, path, {"type", "normal", "offset", "in_plane_force"});
    return Punctual{r.vec3("normal"), r.number("offset"), r.vec2("in_plane_force")};
  }
  throw CaseFileError(path + ": unknown joint type '" + type + "'");
}

json joint_to_json(const BoundaryJoint& joint) {
  json out = {{"type", std::string(joint_type_name(joint))}};
  std::visit(overloaded{
                 [&](const Spherical& j) { out["anchor"] = to_json(j.anchor); },
                 [&](const ImposedForce& j) { out["force"] = to_json(j.force); },
                 [&](const Spring& j) {
                   out["stiffness"] = j.stiffness;
                   out["ref_point"] = to_json(j.ref_point);
                 },
                 [&](const LinearAnnular& j) {
                   out["axis"] = to_json(j.axis);
                   out["axial_force"] = j.axial_force;
                   out["transverse_position"] = to_json(j.transverse_position);
                 },
                 [&](const SpringLinearAnnular& j) {
                   out["axis"] = to_json(j.axis);
                   out["stiffness"] = j.stiffness;
                   out["ref_point"] = to_json(j.ref_point);
                   out["transverse_position"] = to_json(j.transverse_position);
                 },
                 [&](const Punctual& j) {
                   out["normal"] = to_json(j.normal);
                   out["offset"] = j.offset;
                   out["in_plane_force"] = to_json(j.in_plane_force);
                 },
             },
             joint);
  return out;
}

LoadSpec parse_load(const json& doc) {
  if (!doc.is_object() || !doc.contains("type") || !doc.at("type").is_string()) {
    throw CaseFileError("load: needs a string 'type'");
  }
  const std::string type = doc.at("type").get<std::string>();
  LoadSpec spec;
  if (type == "buoyant_weight") {
    ObjectReader r(doc, "load", {"type"});
    spec.kind = LoadSpec::Kind::BuoyantWeight;
    return spec;
  }
  if (type == "custom") {
    ObjectReader r(doc, "load", {"type", "table"});
    const json& table = r.at("table");
    if (!table.is_array()) throw CaseFileError("load.table: expected an array");
    spec.kind = LoadSpec::Kind::Custom;
    for (std::size_t i = 0; i < table.size(); ++i) {
      ObjectReader row(table[i], "load.table[" + std::to_string(i) + "]", {"s_begin", "s_end", "force"});
      spec.table.push_back({row.number("s_begin"), row.number("s_end"), row.vec3("force")});
    }
    return spec;
  }
  throw CaseFileError("load: unknown type '" + type + "'");
}

}  // namespace

CaseDefinition parse_case(const json& doc) {
  ObjectReader top(doc, "case", {"properties", "load", "joint_start", "joint_end", "convention", "solver"});
  CaseDefinition def;

  ObjectReader props(top.at("properties"), "properties",
                     {"length_rest", "young_modulus", "cross_area", "density_material",
                      "density_fluid", "gravity"});
  def.props.length_rest = props.number("length_rest");
  def.props.young_modulus = props.number("young_modulus");
  def.props.cross_area = props.number("cross_area");
  def.props.density_material = props.number("density_material");
  def.props.density_fluid = props.number("density_fluid");
  def.props.gravity = props.number_or("gravity", kDefaultGravity);

  def.load = top.has("load") ? parse_load(top.at("load")) : LoadSpec{};
  def.joint_start = parse_joint(top.at("joint_start"), "joint_start");
  def.joint_end = parse_joint(top.at("joint_end"), "joint_end");

  if (top.has("convention")) {
    const std::string conv = top.string("convention");
    if (conv == "I") {
      def.convention = Convention::I;
    } else if (conv == "II") {
      def.convention = Convention::II;
    } else {
      throw CaseFileError("convention: expected \"I\" or \"II\", got '" + conv + "'");
    }
  }

  if (top.has("solver")) {
    ObjectReader s(top.at("solver"), "solver",
                   {"newton_tol", "newton_max_iter", "rkf45_abs_tol", "guess_c", "position_guess"});
    def.solver.newton_tol = s.number_or("newton_tol", def.solver.newton_tol);
    def.solver.newton_max_iter = s.integer_or("newton_max_iter", def.solver.newton_max_iter);
    def.solver.rkf45_abs_tol = s.number_or("rkf45_abs_tol", def.solver.rkf45_abs_tol);
    def.solver.guess_c = s.number_or("guess_c", def.solver.guess_c);
    if (s.has("position_guess")) def.solver.position_guess = s.vec3("position_guess");
  }

  // Semantic checks reuse the library validators.
  try {
    validate(to_problem(def));
  } catch (const SolverError& e) {
    throw CaseFileError(e.what());
  }
  return def;
}

CaseDefinition parse_case_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CaseFileError(std::string("malformed JSON: ") + e.what());
  }
  return parse_case(doc);
}

json case_to_json(const CaseDefinition& def) {
  json out;
  out["properties"] = {{"length_rest", def.props.length_rest},
                       {"young_modulus", def.props.young_modulus},
                       {"cross_area", def.props.cross_area},
                       {"density_material", def.props.density_material},
                       {"density_fluid", def.props.density_fluid},
                       {"gravity", def.props.gravity}};
  if (def.load.kind == LoadSpec::Kind::BuoyantWeight) {
    out["load"] = {{"type", "buoyant_weight"}};
  } else {
    json table = json::array();
    for (const auto& seg : def.load.table) {
      table.push_back({{"s_begin", seg.s_begin}, {"s_end", seg.s_end}, {"force", to_json(seg.force)}});
    }
    out["load"] = {{"type", "custom"}, {"table", table}};
  }
  out["joint_start"] = joint_to_json(def.joint_start);
  out["joint_end"] = joint_to_json(def.joint_end);
  out["convention"] = def.convention == Convention::I ? "I" : "II";
  json solver = {{"newton_tol", def.solver.newton_tol},
                 {"newton_max_iter", def.solver.newton_max_iter},
                 {"rkf45_abs_tol", def.solver.rkf45_abs_tol},
                 {"guess_c", def.solver.guess_c}};
  if (def.solver.position_guess) solver["position_guess"] = to_json(*def.solver.position_guess);
  out["solver"] = solver;
  return out;
}

ShootingProblem to_problem(const CaseDefinition& def) {
  ShootingProblem p;
  p.props = def.props;
  p.load = def.load.kind == LoadSpec::Kind::BuoyantWeight ? buoyant_weight_load(def.props)
                                                          : piecewise_constant_load(def.load.table);
  p.joint_start = def.joint_start;
  p.joint_end = def.joint_end;
  p.integrator = IntegratorSettings::for_length(def.props.length_rest, def.solver.rkf45_abs_tol);
  p.newton.tol = def.solver.newton_tol;
  p.newton.max_iter = def.solver.newton_max_iter;
  p.convention = def.convention;
  p.guess_c = def.solver.guess_c;
  p.position_guess = def.solver.position_guess;
  return p;
}

CatenaryCase to_oracle_case(const CaseDefinition& def) {
  if (def.load.kind != LoadSpec::Kind::BuoyantWeight) {
    throw SolverError(ErrorKind::UnsupportedCase, "the closed form needs the buoyant_weight load");
  }
  CatenaryCase c = to_catenary_case(def.props, def.joint_start, def.joint_end, def.convention);
  c.guess_c = def.solver.guess_c;
  if (def.solver.position_guess) {
    c.position_guess = Vec2(def.solver.position_guess->x(), def.solver.position_guess->z());
  }
  return c;
}

CaseDefinition catalog_case(const CaseId& id, const CatalogSettings& settings) {
  for (const auto& entry : build_catalog(settings)) {
    if (!(entry.id == id)) continue;
    CaseDefinition def;
    def.props = entry.problem.props;
    def.joint_start = entry.problem.joint_start;
    def.joint_end = entry.problem.joint_end;
    def.convention = entry.problem.convention;
    def.solver.newton_tol = entry.problem.newton.tol;
    def.solver.newton_max_iter = entry.problem.newton.max_iter;
    def.solver.rkf45_abs_tol = entry.problem.integrator.abs_tol;
    def.solver.guess_c = entry.problem.guess_c;
    def.solver.position_guess = entry.problem.position_guess;
    return def;
  }
  throw SolverError(ErrorKind::InvalidInput, "unknown catalog case " + id.name());
}

}  // namespace mooring
