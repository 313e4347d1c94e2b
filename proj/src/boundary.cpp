#include "mooring/boundary.hpp"

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

// The two axes orthogonal to `axis`, ascending.
std::array<int, 2> transverse_axes(int axis) {
  switch (axis) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

Partition make_partition(std::array<bool, 3> position_constrained) {
  Partition p;
  int nc = 0, nu = 0;
  // Wrench/twist duality: axis i constrains either r_i or n_i, never both.
  for (int i = 0; i < 3; ++i) {
    if (position_constrained[i]) {
      p.constrained[nc++] = i;
    } else {
      p.unknown[nu++] = i;
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (position_constrained[i]) {
      p.unknown[nu++] = 3 + i;
    } else {
      p.constrained[nc++] = 3 + i;
    }
  }
  std::sort(p.constrained.begin(), p.constrained.end());
  std::sort(p.unknown.begin(), p.unknown.end());
  return p;
}

void check_vector(const Vec3& v, const char* what) {
  if (!v.allFinite()) throw SolverError(ErrorKind::InvalidInput, std::string(what) + " must be finite");
}

void check_stiffness(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw SolverError(ErrorKind::InvalidInput, "spring stiffness must be finite and > 0");
  }
}

}  // namespace

std::string_view component_name(int component) {
  static constexpr std::string_view names[] = {"x", "y", "z", "n_x", "n_y", "n_z"};
  return names[component];
}

std::string_view joint_type_name(const BoundaryJoint& joint) {
  return std::visit(overloaded{
                        [](const Spherical&) { return std::string_view("spherical"); },
                        [](const ImposedForce&) { return std::string_view("imposed_force"); },
                        [](const Spring&) { return std::string_view("spring"); },
                        [](const LinearAnnular&) { return std::string_view("linear_annular"); },
                        [](const SpringLinearAnnular&) {
                          return std::string_view("spring_linear_annular");
                        },
                        [](const Punctual&) { return std::string_view("punctual"); },
                    },
                    joint);
}

bool Partition::is_constrained(int component) const {
  return std::find(constrained.begin(), constrained.end(), component) != constrained.end();
}

int axis_index(const Vec3& axis) {
  if (!axis.allFinite() || std::abs(axis.norm() - 1.0) > 1e-12) {
    throw SolverError(ErrorKind::InvalidInput, "joint axis must be a unit vector");
  }
  for (int i = 0; i < 3; ++i) {
    if (std::abs(std::abs(axis[i]) - 1.0) <= 1e-12) return i;
  }
  throw SolverError(ErrorKind::NonAxisAligned, "joint axis must be a global coordinate axis");
}

void validate(const BoundaryJoint& joint) {
  std::visit(overloaded{
                 [](const Spherical& j) { check_vector(j.anchor, "anchor"); },
                 [](const ImposedForce& j) { check_vector(j.force, "force"); },
                 [](const Spring& j) {
                   check_stiffness(j.stiffness);
                   check_vector(j.ref_point, "ref_point");
                 },
                 [](const LinearAnnular& j) {
                   axis_index(j.axis);
                   if (!std::isfinite(j.axial_force) || !j.transverse_position.allFinite())
                     throw SolverError(ErrorKind::InvalidInput, "linear annular data must be finite");
                 },
                 [](const SpringLinearAnnular& j) {
                   axis_index(j.axis);
                   check_stiffness(j.stiffness);
                   check_vector(j.ref_point, "ref_point");
                   if (!j.transverse_position.allFinite())
                     throw SolverError(ErrorKind::InvalidInput, "transverse position must be finite");
                 },
                 [](const Punctual& j) {
                   axis_index(j.normal);
                   if (!std::isfinite(j.offset) || !j.in_plane_force.allFinite())
                     throw SolverError(ErrorKind::InvalidInput, "punctual data must be finite");
                 },
             },
             joint);
}

Partition partition(const BoundaryJoint& joint) {
  return std::visit(overloaded{
                        [](const Spherical&) { return make_partition({true, true, true}); },
                        [](const ImposedForce&) { return make_partition({false, false, false}); },
                        [](const Spring&) { return make_partition({false, false, false}); },
                        [](const LinearAnnular& j) {
                          std::array<bool, 3> fixed{true, true, true};
                          fixed[axis_index(j.axis)] = false;
                          return make_partition(fixed);
                        },
                        [](const SpringLinearAnnular& j) {
                          std::array<bool, 3> fixed{true, true, true};
                          fixed[axis_index(j.axis)] = false;
                          return make_partition(fixed);
                        },
                        [](const Punctual& j) {
                          std::array<bool, 3> fixed{false, false, false};
                          fixed[axis_index(j.normal)] = true;
                          return make_partition(fixed);
                        },
                    },
                    joint);
}

Vec3 position_targets(const BoundaryJoint& joint) {
  return std::visit(overloaded{
                        [](const Spherical& j) -> Vec3 { return j.anchor; },
                        [](const ImposedForce&) -> Vec3 { return Vec3::Zero(); },
                        [](const Spring&) -> Vec3 { return Vec3::Zero(); },
                        [](const LinearAnnular& j) -> Vec3 {
                          Vec3 t = Vec3::Zero();
                          const auto ax = transverse_axes(axis_index(j.axis));
                          t[ax[0]] = j.transverse_position[0];
                          t[ax[1]] = j.transverse_position[1];
                          return t;
                        },
                        [](const SpringLinearAnnular& j) -> Vec3 {
                          Vec3 t = Vec3::Zero();
                          const auto ax = transverse_axes(axis_index(j.axis));
                          t[ax[0]] = j.transverse_position[0];
                          t[ax[1]] = j.transverse_position[1];
                          return t;
                        },
                        [](const Punctual& j) -> Vec3 {
                          Vec3 t = Vec3::Zero();
                          t[axis_index(j.normal)] = j.offset;
                          return t;
                        },
                    },
                    joint);
}

Vec3 boundary_force(const BoundaryJoint& joint, const Vec3& r, End end) {
  const double sigma = end_sign(end);
  return std::visit(overloaded{
                        [](const Spherical&) -> Vec3 { return Vec3::Zero(); },
                        [&](const ImposedForce& j) -> Vec3 { return sigma * j.force; },
                        [&](const Spring& j) -> Vec3 {
                          return sigma * j.stiffness * (j.ref_point - r);
                        },
                        [&](const LinearAnnular& j) -> Vec3 {
                          Vec3 f = Vec3::Zero();
                          const int i = axis_index(j.axis);
                          f[i] = sigma * j.axial_force * j.axis[i];
                          return f;
                        },
                        [&](const SpringLinearAnnular& j) -> Vec3 {
                          Vec3 f = Vec3::Zero();
                          const int i = axis_index(j.axis);
                          f[i] = sigma * j.stiffness * (j.ref_point[i] - r[i]);
                          return f;
                        },
                        [&](const Punctual& j) -> Vec3 {
                          Vec3 f = Vec3::Zero();
                          const auto ax = transverse_axes(axis_index(j.normal));
                          f[ax[0]] = sigma * j.in_plane_force[0];
                          f[ax[1]] = sigma * j.in_plane_force[1];
                          return f;
                        },
                    },
                    joint);
}

bool force_is_constant(const BoundaryJoint& joint, int component) {
  if (component < kNx || !partition(joint).is_constrained(component)) return false;
  return !std::holds_alternative<Spring>(joint) &&
         !std::holds_alternative<SpringLinearAnnular>(joint);
}

}  // namespace mooring
