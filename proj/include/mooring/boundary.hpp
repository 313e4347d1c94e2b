#pragma once

#include <array>
#include <string_view>
#include <variant>

#include "mooring/model.hpp"

namespace mooring {

// State component indices into phi = [x, y, z, n_x, n_y, n_z].
enum Component : int { kX = 0, kY, kZ, kNx, kNy, kNz };

std::string_view component_name(int component);

/// Ball joint pinned at `anchor`: positions fixed, reaction free.
struct Spherical {
  Vec3 anchor = Vec3::Zero();
  bool operator==(const Spherical&) const = default;
};

/// Free end loaded by a constant force (the force applied by the joint on the line).
struct ImposedForce {
  Vec3 force = Vec3::Zero();
  bool operator==(const ImposedForce&) const = default;
};

/// Free end tied to `ref_point` by an isotropic spring, force k (p - r).
struct Spring {
  double stiffness = 0.0;
  Vec3 ref_point = Vec3::Zero();
  bool operator==(const Spring&) const = default;
};

/// Slides along `axis` under a constant axial force; the two transverse
/// coordinates are fixed. `transverse_position` lists them in ascending
/// axis order (for axis x: y then z).
struct LinearAnnular {
  Vec3 axis = Vec3::UnitX();
  double axial_force = 0.0;
  Vec2 transverse_position = Vec2::Zero();
  bool operator==(const LinearAnnular&) const = default;
};

/// Linear annular joint whose axial force comes from a spring k (p - r) along the axis.
struct SpringLinearAnnular {
  Vec3 axis = Vec3::UnitX();
  double stiffness = 0.0;
  Vec3 ref_point = Vec3::Zero();
  Vec2 transverse_position = Vec2::Zero();
  bool operator==(const SpringLinearAnnular&) const = default;
};

/// Slides in the plane orthogonal to `normal`. The coordinate along the
/// normal is fixed at `offset`; the reaction along the normal is free and
/// the two in-plane force components are imposed (ascending axis order).
struct Punctual {
  Vec3 normal = Vec3::UnitZ();
  double offset = 0.0;
  Vec2 in_plane_force = Vec2::Zero();
  bool operator==(const Punctual&) const = default;
};

using BoundaryJoint =
    std::variant<Spherical, ImposedForce, Spring, LinearAnnular, SpringLinearAnnular, Punctual>;

std::string_view joint_type_name(const BoundaryJoint& joint);

enum class End { Start, End };

/// -1 at s = 0, +1 at s = L: n is the force from the s + ds side on s.
inline double end_sign(End end) { return end == End::Start ? -1.0 : 1.0; }

/// Split of the six state components at one end into constrained and unknown
/// parts. Both lists are sorted ascending.
struct Partition {
  std::array<int, 3> constrained{};
  std::array<int, 3> unknown{};

  bool is_constrained(int component) const;
};

/// Global axis index of a unit coordinate vector (+/- e_i). Throws
/// InvalidInput for a non-unit vector and NonAxisAligned otherwise.
int axis_index(const Vec3& axis);

/// Throws InvalidInput / NonAxisAligned for malformed joints.
void validate(const BoundaryJoint& joint);

Partition partition(const BoundaryJoint& joint);

/// Position targets for the position-constrained components (others are 0).
Vec3 position_targets(const BoundaryJoint& joint);

/// Tension values imposed at the given end for the force-constrained
/// components (others are 0), including the end sign.
Vec3 boundary_force(const BoundaryJoint& joint, const Vec3& r, End end);

/// True when `component` is force-constrained to a constant (not a spring law).
bool force_is_constant(const BoundaryJoint& joint, int component);

}  // namespace mooring
