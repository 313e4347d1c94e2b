#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mooring/errors.hpp"
#include "mooring/model.hpp"
#include "mooring/verify.hpp"

using namespace mooring;

namespace {

// Independent arithmetic: 9.81 * 3.1426e-4 * (7850 - 1025), EA = 2.11e11 * 3.1426e-4.
constexpr double kOmega = 21.040728345;
constexpr double kEA = 66308860.0;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SolverError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no SolverError thrown";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(RelativeWeight, ReferenceLine) {
  const LineProperties p = reference_line();
  EXPECT_NEAR(relative_weight(p), kOmega, 1e-12 * kOmega);
  EXPECT_NEAR(p.axial_stiffness(), kEA, 1e-6);
}

TEST(RelativeWeight, NeutralAndBuoyant) {
  LineProperties p = reference_line();
  p.density_material = p.density_fluid;
  EXPECT_EQ(relative_weight(p), 0.0);
  p.density_material = 500.0;
  EXPECT_LT(relative_weight(p), 0.0);
}

TEST(RelativeWeight, LinearInDensityDifferenceAndArea) {
  const LineProperties p = reference_line();
  LineProperties q = p;
  q.density_material = p.density_fluid + 2.0 * (p.density_material - p.density_fluid);
  EXPECT_NEAR(relative_weight(q), 2.0 * relative_weight(p), 1e-12 * kOmega);
  q = p;
  q.cross_area *= 3.0;
  EXPECT_NEAR(relative_weight(q), 3.0 * relative_weight(p), 1e-12 * kOmega);
}

TEST(StretchFactor, Examples) {
  EXPECT_DOUBLE_EQ(stretch_factor(kEA, kEA), 2.0);
  EXPECT_NEAR(stretch_factor(1052.04, 6.63089e7), 1.0000158657435126, 1e-15);
  EXPECT_EQ(kind_of([] { stretch_factor(0.0, kEA); }), ErrorKind::SingularTension);
  EXPECT_EQ(kind_of([] { stretch_factor(-1.0, kEA); }), ErrorKind::SingularTension);
}

TEST(StateDerivative, AxialTensionNoLoad) {
  LineProperties p = reference_line();
  const StateVector st{Vec3::Zero(), Vec3(0, 0, p.axial_stiffness())};
  const Vec6 d = state_derivative(st, 0.0, DistributedLoad{}, p);
  EXPECT_NEAR(d[0], 0.0, 0.0);
  EXPECT_NEAR(d[2], 2.0, 1e-15);
  EXPECT_TRUE(d.tail<3>().isZero(0.0));
}

TEST(StateDerivative, GravityFlipsSign) {
  const LineProperties p = reference_line();
  const StateVector st{Vec3::Zero(), Vec3(100, 0, -100)};
  const Vec6 d = state_derivative(st, 3.0, buoyant_weight_load(p), p);
  EXPECT_NEAR(d[5], kOmega, 1e-12);
  EXPECT_EQ(d[3], 0.0);
  EXPECT_EQ(d[4], 0.0);
}

TEST(StateDerivative, InclinedTension) {
  LineProperties p = reference_line();
  p.young_modulus = 6.63089e7 / p.cross_area;
  const StateVector st{Vec3::Zero(), Vec3(100, 0, -100)};
  const Vec6 d = state_derivative(st, 0.0, DistributedLoad{}, p);
  const double v = 1.0000021327658314;  // 1 + 141.421.../6.63089e7
  EXPECT_NEAR(d[0], v / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(d[2], -v / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(d[1], 0.0);
}

TEST(StateDerivative, ZeroTensionIsSingular) {
  const LineProperties p = reference_line();
  EXPECT_EQ(kind_of([&] { state_derivative(StateVector{}, 0.0, DistributedLoad{}, p); }),
            ErrorKind::SingularTension);
}

TEST(StateDerivative, TangencyAndStretchProperty) {
  const LineProperties p = reference_line();
  const double ea = p.axial_stiffness();
  std::mt19937_64 rng(20180617);
  std::uniform_real_distribution<double> comp(-1.0, 1.0);
  std::uniform_real_distribution<double> logmag(-3.0, 7.0);
  for (int i = 0; i < 2000; ++i) {
    Vec3 n(comp(rng), comp(rng), comp(rng));
    if (n.norm() == 0.0) continue;
    n *= std::pow(10.0, logmag(rng)) / n.norm();
    const StateVector st{Vec3(comp(rng), comp(rng), comp(rng)), n};
    const Vec3 dr = state_derivative(st, 0.0, buoyant_weight_load(p), p).head<3>();
    const double nn = n.norm();
    EXPECT_LE(dr.cross(n).norm() / (dr.norm() * nn), 1e-14);
    const double v = 1.0 + nn / ea;
    EXPECT_LE(std::abs(dr.norm() - v) / v, 1e-14);
  }
}

TEST(BuoyantWeightLoad, ConstantDownward) {
  const LineProperties p = reference_line();
  const DistributedLoad f = buoyant_weight_load(p);
  const Vec3 at0 = f(0.0, Vec3::Zero());
  EXPECT_NEAR(at0.z(), -kOmega, 1e-12);
  EXPECT_EQ(at0.x(), 0.0);
  EXPECT_EQ(at0, f(p.length_rest, Vec3(1, 2, 3)));

  LineProperties neutral = p;
  neutral.density_material = neutral.density_fluid;
  EXPECT_TRUE(buoyant_weight_load(neutral)(10.0, Vec3::Zero()).isZero(0.0));
}

TEST(PiecewiseConstantLoad, IntervalsAndGaps) {
  const DistributedLoad f = piecewise_constant_load({{10.0, 20.0, Vec3(0, 0, -2)}, {0.0, 10.0, Vec3(1, 0, 0)}});
  EXPECT_EQ(f(0.0, Vec3::Zero()), Vec3(1, 0, 0));
  EXPECT_EQ(f(10.0, Vec3::Zero()), Vec3(0, 0, -2));
  EXPECT_EQ(f(20.0, Vec3::Zero()), Vec3(0, 0, -2));
  EXPECT_TRUE(f(25.0, Vec3::Zero()).isZero(0.0));
}

TEST(PiecewiseConstantLoad, RejectsOverlapAndEmpty) {
  EXPECT_EQ(kind_of([] { piecewise_constant_load({{0, 10, Vec3::Zero()}, {5, 15, Vec3::Zero()}}); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { piecewise_constant_load({{3, 3, Vec3::Zero()}}); }), ErrorKind::InvalidInput);
}

TEST(LineProperties, Validation) {
  LineProperties p = reference_line();
  EXPECT_NO_THROW(validate(p));
  p.length_rest = 0.0;
  EXPECT_EQ(kind_of([&] { validate(p); }), ErrorKind::InvalidInput);
  p = reference_line();
  p.cross_area = -1.0;
  EXPECT_EQ(kind_of([&] { validate(p); }), ErrorKind::InvalidInput);
  p = reference_line();
  p.young_modulus = std::nan("");
  EXPECT_EQ(kind_of([&] { validate(p); }), ErrorKind::InvalidInput);
}
