#include <gtest/gtest.h>

#include <random>

#include "mooring/catenary.hpp"
#include "mooring/errors.hpp"
#include "mooring/verify.hpp"

using namespace mooring;

namespace {

constexpr double kOmegaL = 1052.03641725;
constexpr double kForce = 105.203641725;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SolverError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no SolverError thrown";
  return ErrorKind::InvalidInput;
}

CatenaryCase oracle_case(const std::string& name) {
  for (const auto& e : build_catalog()) {
    if (e.id.name() == name) return e.oracle_case;
  }
  throw std::runtime_error("no case " + name);
}

CatenaryParameters params(double nx, double nz, Convention conv = Convention::I) {
  CatenaryParameters p;
  p.n_x0 = nx;
  p.n_z0 = nz;
  p.convention = conv;
  return p;
}

}  // namespace

TEST(LocalShape, StartsAtOrigin) {
  const LocalShape s = local_shape(0.0, params(100.0, -300.0), reference_line());
  EXPECT_EQ(s.X, 0.0);
  EXPECT_EQ(s.Z, 0.0);
}

TEST(LocalShape, ForceEndClosedForm) {
  const LineProperties p = reference_line();
  const LocalShape s = local_shape(50.0, params(kForce, -kOmegaL), p);
  EXPECT_NEAR(s.X, 14.991194079985109, 1e-11);
  EXPECT_NEAR(s.Z, -45.24977474808075, 1e-11);
}

TEST(LocalShape, SymmetricLineReturnsToLevel) {
  const LineProperties p = reference_line();
  const LocalShape s = local_shape(50.0, params(120.79413781486917, -0.5 * kOmegaL), p);
  EXPECT_NEAR(s.X, 25.0, 1e-11);
  EXPECT_NEAR(s.Z, 0.0, 1e-12);
}

TEST(LocalShape, NegativeHorizontalTensionMirrors) {
  const LineProperties p = reference_line();
  const LocalShape a = local_shape(30.0, params(80.0, -200.0), p);
  const LocalShape b = local_shape(30.0, params(-80.0, -200.0), p);
  EXPECT_EQ(a.X, -b.X);
  EXPECT_EQ(a.Z, b.Z);
}

TEST(LocalShape, WeightlessStraightLine) {
  LineProperties p = reference_line();
  p.density_material = p.density_fluid;
  const double ea = p.axial_stiffness();
  const LocalShape s = local_shape(50.0, params(300.0, 400.0), p);
  EXPECT_NEAR(s.X, 50.0 * (1.0 + 500.0 / ea) * 0.6, 1e-12);
  EXPECT_NEAR(s.Z, 50.0 * (1.0 + 500.0 / ea) * 0.8, 1e-12);
  EXPECT_EQ(kind_of([&] { local_shape(1.0, params(0.0, 0.0), p); }), ErrorKind::SingularTension);
}

TEST(LocalShape, ZeroHorizontalTension) {
  EXPECT_EQ(kind_of([] { local_shape(1.0, params(0.0, -10.0), reference_line()); }),
            ErrorKind::ZeroHorizontalTension);
}

TEST(LocalShape, MatchesStringOdeProperty) {
  // d(X, Z)/ds = (1 + T/EA) (N_x, N_z) / T by central differences.
  const LineProperties p = reference_line();
  const double ea = p.axial_stiffness();
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> nx(5.0, 2000.0);
  std::uniform_real_distribution<double> nz(-3000.0, 1000.0);
  std::uniform_real_distribution<double> sd(0.5, 49.5);
  for (int i = 0; i < 300; ++i) {
    const CatenaryParameters cp = params(nx(rng), nz(rng));
    const double s = sd(rng);
    const double h = 1e-4;
    const LocalShape fwd = local_shape(s + h, cp, p);
    const LocalShape bwd = local_shape(s - h, cp, p);
    const LocalTension n = local_tension(s, cp, p);
    const double t = std::hypot(n.N_x, n.N_z);
    const double v = 1.0 + t / ea;
    EXPECT_NEAR((fwd.X - bwd.X) / (2 * h), v * n.N_x / t, 1e-6);
    EXPECT_NEAR((fwd.Z - bwd.Z) / (2 * h), v * n.N_z / t, 1e-6);
  }
}

TEST(LocalShape, HorizontalProgressIsMonotoneProperty) {
  const LineProperties p = reference_line();
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> nx(1e-2, 1e4);
  std::uniform_real_distribution<double> nz(-1e5, 1e5);
  for (int i = 0; i < 100; ++i) {
    const CatenaryParameters cp = params(nx(rng), nz(rng));
    double prev = -1.0;
    for (int k = 0; k <= 50; ++k) {
      const double X = local_shape(k * 1.0, cp, p).X;
      ASSERT_TRUE(std::isfinite(X));
      EXPECT_GT(X, prev);
      prev = X;
    }
  }
}

TEST(LocalTension, WeightBalance) {
  const LineProperties p = reference_line();
  const CatenaryParameters cp = params(120.0, -500.0);
  const LocalTension a = local_tension(0.0, cp, p);
  const LocalTension b = local_tension(50.0, cp, p);
  EXPECT_EQ(a.N_x, b.N_x);
  EXPECT_NEAR(b.N_z - a.N_z, kOmegaL, 1e-9);
}

TEST(SemiAnalytic, ConventionOneCases) {
  const LineProperties p = reference_line();
  const CatenarySolution a = semi_analytic_solve(oracle_case("I-a"));
  EXPECT_NEAR(a.params.n_x0, 120.79413781486917, 1e-9);
  EXPECT_NEAR(a.params.n_z0, -0.5 * kOmegaL, 1e-9);

  const CatenarySolution b = semi_analytic_solve(oracle_case("I-b"));
  EXPECT_NEAR(b.params.n_x0, kForce, 1e-12);
  EXPECT_NEAR(b.params.n_z0, -kOmegaL, 1e-9);

  const CatenarySolution c = semi_analytic_solve(oracle_case("I-c"));
  EXPECT_NEAR(c.params.n_x0, 120.68865754582906, 1e-9);
  EXPECT_NEAR(c.params.n_z0, -526.5853611131231, 1e-9);
  const GlobalFields cg = to_global(50.0, c.params, p);
  EXPECT_NEAR(cg.x, 24.987931134245417, 1e-11);
  EXPECT_NEAR(cg.z, -0.05254510561368769, 1e-11);

  const CatenarySolution d = semi_analytic_solve(oracle_case("I-d"));
  EXPECT_NEAR(d.params.n_x0, kForce, 1e-12);
  EXPECT_NEAR(d.params.n_z0, -526.018208625, 1e-9);
  EXPECT_NEAR(to_global(50.0, d.params, p).x, 23.124462741222787, 1e-11);

  const CatenarySolution e = semi_analytic_solve(oracle_case("I-e"));
  EXPECT_NEAR(e.params.n_x0, 120.68860362152651, 1e-9);
  EXPECT_NEAR(e.params.n_z0, -526.018208625, 1e-9);
  EXPECT_NEAR(to_global(50.0, e.params, p).x, 24.987931139637847, 1e-11);
}

TEST(SemiAnalytic, AllCatalogCasesConverge) {
  for (const auto& entry : build_catalog()) {
    const CatenarySolution s = semi_analytic_solve(entry.oracle_case);
    EXPECT_LE(s.residual_norm, 1e-9 * kOmegaL) << entry.id.name();
    EXPECT_LE(s.last_relative_step, 1e-12) << entry.id.name();
  }
}

TEST(SemiAnalytic, ConventionTwoTracesSameCurve) {
  const LineProperties p = reference_line();
  for (const char* bc : {"a", "b", "c", "d", "e"}) {
    const CatenarySolution one = semi_analytic_solve(oracle_case(std::string("I-") + bc));
    const CatenarySolution two = semi_analytic_solve(oracle_case(std::string("II-") + bc));
    EXPECT_EQ(two.params.convention, Convention::II);
    for (int k = 0; k <= 10; ++k) {
      const double s = 5.0 * k;
      const GlobalFields g1 = to_global(s, one.params, p);
      const GlobalFields g2 = to_global(50.0 - s, two.params, p);
      EXPECT_NEAR(g1.x, g2.x, 1e-9) << bc << " s=" << s;
      EXPECT_NEAR(g1.z, g2.z, 1e-9) << bc << " s=" << s;
      // Same material point, opposite parametrisation: the tension flips sign.
      EXPECT_NEAR(g1.n_x, -g2.n_x, 1e-7) << bc;
      EXPECT_NEAR(g1.n_z, -g2.n_z, 1e-7) << bc;
    }
  }
}

TEST(ToCatenaryCase, Unsupported) {
  const LineProperties p = reference_line();
  EXPECT_EQ(kind_of([&] {
              to_catenary_case(p, Spherical{}, Spherical{Vec3(25, 1, 0)}, Convention::I);
            }),
            ErrorKind::UnsupportedCase);
  EXPECT_EQ(kind_of([&] {
              to_catenary_case(p, Spherical{}, Punctual{Vec3::UnitZ(), 0.0, Vec2::Zero()}, Convention::I);
            }),
            ErrorKind::UnsupportedCase);
  EXPECT_EQ(kind_of([&] {
              to_catenary_case(p, Spherical{}, LinearAnnular{Vec3::UnitY(), 1.0, Vec2::Zero()},
                               Convention::I);
            }),
            ErrorKind::UnsupportedCase);
}

TEST(ToCatenaryCase, AnnularAxisSign) {
  const CatenaryCase c = to_catenary_case(reference_line(), Spherical{},
                                          LinearAnnular{-Vec3::UnitX(), 5.0, Vec2(0, 2)}, Convention::I);
  const auto& a = std::get<planar::Annular>(c.end);
  EXPECT_EQ(a.f_x, -5.0);
  EXPECT_EQ(a.z, 2.0);
}
