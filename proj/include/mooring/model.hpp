#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace mooring {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kDefaultGravity = 9.81;

/// Physical constants of a uniform line segment, SI units.
struct LineProperties {
  double length_rest = 0.0;       // L [m]
  double young_modulus = 0.0;     // E [Pa]
  double cross_area = 0.0;        // A [m^2]
  double density_material = 0.0;  // rho [kg/m^3]
  double density_fluid = 0.0;     // rho_f [kg/m^3]
  double gravity = kDefaultGravity;

  double axial_stiffness() const { return young_modulus * cross_area; }

  bool operator==(const LineProperties&) const = default;
};

/// Throws InvalidInput unless L, E, A are positive and every field is finite.
void validate(const LineProperties& props);

/// Position r and internal tension n, both in global Cartesian axes. n is
/// the force exerted by the material at s + ds on the material at s.
struct StateVector {
  Vec3 position = Vec3::Zero();
  Vec3 tension = Vec3::Zero();

  Vec6 packed() const;
  static StateVector unpack(const Vec6& phi);
};

/// Distributed force per unit unstretched length f(s, r) [N/m].
class DistributedLoad {
 public:
  using Evaluator = std::function<Vec3(double s, const Vec3& r)>;

  DistributedLoad() : eval_([](double, const Vec3&) { return Vec3::Zero().eval(); }) {}
  explicit DistributedLoad(Evaluator eval) : eval_(std::move(eval)) {}

  Vec3 operator()(double s, const Vec3& r) const { return eval_(s, r); }

 private:
  Evaluator eval_;
};

/// Direction of the curvilinear abscissa relative to global x:
/// I runs along +x, II along -x.
enum class Convention { I, II };

inline double direction_sign(Convention c) { return c == Convention::I ? 1.0 : -1.0; }

/// Submerged weight per unit length, g A (rho - rho_f). Negative for buoyant lines.
double relative_weight(const LineProperties& props);

/// Elastic stretch 1 + |n| / EA. Throws SingularTension for |n| <= 0.
double stretch_factor(double tension_norm, double ea);

/// Right-hand side of the static string system:
///   dr/ds = (1 + |n|/EA) n/|n|,   dn/ds = -f(s, r).
Vec6 state_derivative(const StateVector& state, double s, const DistributedLoad& load,
                      const LineProperties& props);

/// Constant (0, 0, -omega) load: gravity net of buoyancy.
DistributedLoad buoyant_weight_load(const LineProperties& props);

struct LoadInterval {
  double s_begin = 0.0;
  double s_end = 0.0;
  Vec3 force = Vec3::Zero();

  bool operator==(const LoadInterval&) const = default;
};

/// Piecewise-constant load over [s_begin, s_end) intervals; zero elsewhere.
/// Intervals must be non-empty, finite and non-overlapping.
DistributedLoad piecewise_constant_load(std::vector<LoadInterval> table);

}  // namespace mooring
