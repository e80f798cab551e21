#include <gtest/gtest.h>

#include <random>

#include "asymel/material.hpp"
#include "asymel/solutions3d.hpp"
#include "oracles.hpp"

using namespace asymel;

namespace {

ElasticityMatrix6 m1() { return build_C(MaterialParams3D(oracle::m1())); }
ComplianceMatrix6 d_m1() { return invert_to_D(m1()); }

PartialStressCoeffs random_partial(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PartialStressCoeffs in;
  for (int j = 0; j < 6; ++j) {
    in.a(j) = u(rng);
    in.b(j) = u(rng);
    in.p(j) = u(rng);
  }
  in.c123 = {u(rng), u(rng), u(rng)};
  return in;
}

/// Analytic divergence of a linear stress field, slot by slot.
Vector3 divergence(const StressPolyCoeffs& s) {
  return {s.a(0) + s.b(2) + s.c(3), s.a(2) + s.b(1) + s.c(4), s.a(3) + s.b(4) + s.c(5)};
}

}  // namespace

TEST(StressCoeffs, Examples) {
  const StressPolyCoeffs zero = complete_stress_coeffs({}, {});
  EXPECT_EQ(zero.a, Vector6::Zero());
  EXPECT_EQ(zero.c, Vector6::Zero());

  PartialStressCoeffs in;
  in.a(0) = 1.0;
  EXPECT_EQ(complete_stress_coeffs(in, {}).c(3), -1.0);

  const double rho_g = 2.5;
  EXPECT_EQ(complete_stress_coeffs({}, {0.0, 0.0, -rho_g}).c(5), rho_g);
}

TEST(StressCoeffs, EquilibriumHoldsIdentically) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const BodyForce f{u(rng), u(rng), u(rng)};
    const StressPolyCoeffs s = complete_stress_coeffs(random_partial(rng), f);
    const Vector3 div = divergence(s) + Vector3(f.f1, f.f2, f.f3);
    EXPECT_LT(div.cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT(s.equilibrium_residual(f).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(StrainCoeffs, Examples) {
  const ComplianceMatrix6 d = d_m1();
  const StrainPolyCoeffs zero = strain_coeffs(d, StressPolyCoeffs{});
  EXPECT_EQ(zero.f, Vector6::Zero());
  EXPECT_EQ(zero.e, Vector6::Zero());

  const double a5 = 1.3;
  StressPolyCoeffs torsion;
  torsion.a(4) = a5;
  torsion.b(3) = -a5;
  const StrainPolyCoeffs t = strain_coeffs(d, torsion);
  EXPECT_NEAR(t.g(3), -d.slot(4, 4) * a5, 1e-15);
  EXPECT_NEAR(t.f(3), d.slot(4, 5) * a5, 1e-15);
  EXPECT_EQ(t.h, Vector6::Zero());

  StressPolyCoeffs axial;
  axial.p(5) = 2.0;
  const StrainPolyCoeffs ax = strain_coeffs(d, axial);
  EXPECT_EQ(ax.e(5), d.slot(6, 6) * 2.0);
  EXPECT_EQ(ax.e(0), d.slot(1, 6) * 2.0);
}

TEST(Displacement, ReproducesStrainsAndRigidConditions) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const ComplianceMatrix6 d = d_m1();
  for (int i = 0; i < 30; ++i) {
    const StressPolyCoeffs s = complete_stress_coeffs(random_partial(rng), {u(rng), u(rng), u(rng)});
    const StrainPolyCoeffs e = strain_coeffs(d, s);
    const DisplacementPoly w = displacement_coeffs(e);
    for (int k = 0; k < 5; ++k) {
      const double x = u(rng), y = u(rng), z = u(rng);
      const StrainVec6 got = kinematic_strain(w.gradient(x, y, z));
      EXPECT_LT((got.values - e(x, y, z).values).cwiseAbs().maxCoeff(), 1e-14);
    }
    EXPECT_EQ(w(0, 0, 0), Vector3::Zero());
    const Matrix3 g0 = w.gradient(0, 0, 0);
    EXPECT_EQ(g0(0, 2), 0.0);
    EXPECT_EQ(g0(1, 2), 0.0);
    EXPECT_NEAR(g0(1, 0) - g0(0, 1), 0.0, 1e-16);
  }
}

TEST(Displacement, Examples) {
  const DisplacementPoly zero = displacement_coeffs(StrainPolyCoeffs{});
  EXPECT_EQ(zero(1.0, -2.0, 3.0), Vector3::Zero());

  StrainPolyCoeffs uniform;
  uniform.e(0) = 0.01;
  const DisplacementPoly w = displacement_coeffs(uniform);
  EXPECT_EQ(w(2.0, 3.0, 4.0), Vector3(0.02, 0.0, 0.0));
  EXPECT_EQ(w.linear_x(0), 0.01);
}

TEST(Displacement, AnalyticGradientMatchesPolynomial) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const DisplacementPoly w =
      displacement_coeffs(strain_coeffs(d_m1(), complete_stress_coeffs(random_partial(rng), {})));
  const double h = 1e-3;
  const double x = 0.3, y = -0.4, z = 0.7;
  Matrix3 fd;
  for (int k = 0; k < 3; ++k) {
    const Vector3 e = Vector3::Unit(k) * h;
    fd.col(k) = (w(x + e(0), y + e(1), z + e(2)) - w(x - e(0), y - e(1), z - e(2))) / (2 * h);
  }
  EXPECT_LT((fd - w.gradient(x, y, z)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Torsion, ClosedForms) {
  const ComplianceMatrix6 d = d_m1();
  const TorsionSolution sol = solve_torsion({1.0, 1.0, 4.0}, d);
  EXPECT_EQ(sol.a5, 1.0);
  const Vector3 w = sol.displacement(1.0, 0.0, 2.0);
  EXPECT_NEAR(w(0), 0.0, 1e-15);
  EXPECT_NEAR(w(1), 16.0 / 17.0, 1e-15);
  EXPECT_NEAR(w(2), -1.0 / 17.0, 1e-15);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int i = 0; i < 20; ++i) {
    const double x = u(rng), y = u(rng), z = u(rng);
    const Vector3 wi = sol.displacement(x, y, z);
    EXPECT_NEAR(wi(0), -d.slot(4, 4) * sol.a5 * y * z, 1e-15);
    EXPECT_NEAR(wi(1), d.slot(4, 4) * sol.a5 * x * z, 1e-15);
    EXPECT_NEAR(wi(2), 0.5 * d.slot(4, 5) * sol.a5 * (x * x + y * y), 1e-15);
    const StressVec6 s = sol.stress(x, y, z);
    EXPECT_EQ(s[3], -sol.a5 * y);
    EXPECT_EQ(s[4], sol.a5 * x);
    EXPECT_EQ(s[0], 0.0);
    EXPECT_EQ(s[5], 0.0);
    EXPECT_NEAR(sol.axial_section_shear(x, y), 0.0, 1e-15);
    EXPECT_NEAR(sol.section_shear(x, y), sol.a5 * std::hypot(x, y), 1e-15);
  }
  const CylindricalDisplacement cyl = sol.cylindrical(1.0, 1.0);
  EXPECT_EQ(cyl.w_r, 0.0);
  EXPECT_NEAR(cyl.w_3, -1.0 / 17.0, 1e-15);
  EXPECT_NEAR(sol.twist_rate(), 8.0 / 17.0, 1e-15);
}

TEST(Torsion, SurfaceTractionAndEdgeShear) {
  const TorsionSolution sol = solve_torsion({2.0, 0.5, 3.0}, d_m1());
  for (int k = 0; k < 32; ++k) {
    const double phi = 2 * std::numbers::pi * k / 32;
    const double c = std::cos(phi), s = std::sin(phi);
    const StressVec6 t = sol.stress(0.5 * c, 0.5 * s, 0.3);
    EXPECT_LE(std::abs(t[3] * c + t[4] * s), 1e-12 * 2.0);
    EXPECT_NEAR(sol.section_shear(0.5 * c, 0.5 * s), 2.0, 1e-14);
  }
}

TEST(Torsion, ClassicalHasNoDeplanation) {
  const TorsionSolution sol = solve_torsion({1.0, 1.0, 1.0}, invert_to_D(build_C(MaterialParams3D::isotropic(2, 1))));
  EXPECT_EQ(sol.d45, 0.0);
  for (double x : {-0.5, 0.1, 0.9}) EXPECT_EQ(sol.displacement(x, 0.3, 0.2)(2), 0.0);
}

TEST(Torsion, RejectsBadGeometry) {
  EXPECT_THROW(solve_torsion({1.0, 0.0, 1.0}, d_m1()), InvalidParameter);
  EXPECT_THROW(solve_torsion({1.0, 1.0, -1.0}, d_m1()), InvalidParameter);
}

TEST(PlateBending, AlphaTable) {
  std::mt19937_64 rng(30);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    const ComplianceMatrix6 d = invert_to_D(build_C(MaterialParams3D(oracle::random_coefficients(rng))));
    const double c1 = u(rng), c2 = u(rng);
    const PlateBendingSolution sol = solve_plate_bending({c1, c2, 0.1, 1.0, 1.0}, d);
    auto D = [&d](int r, int c) { return d.slot(r, c); };
    const double a15 = D(1, 1) * c1 + D(1, 2) * c2;
    const double a16 = 0.5 * (D(3, 1) * c1 + D(3, 2) * c2);
    const double a26 = D(2, 1) * c1 + D(2, 2) * c2;
    EXPECT_NEAR(sol.alpha(1, 5), a15, 1e-14);
    EXPECT_NEAR(sol.alpha(1, 6), a16, 1e-14);
    EXPECT_NEAR(sol.alpha(2, 6), a26, 1e-14);
    EXPECT_NEAR(sol.alpha(2, 5), a16, 1e-14);
    EXPECT_NEAR(sol.alpha(3, 1), -a15, 1e-14);
    EXPECT_NEAR(sol.alpha(3, 2), -a26, 1e-14);
    EXPECT_NEAR(sol.alpha(3, 4), -a16, 1e-14);
    EXPECT_NEAR(sol.alpha(3, 3), D(6, 1) * c1 + D(6, 2) * c2, 1e-14);
    // Mid-plane: in-plane displacements vanish.
    const Vector3 w = sol.displacement(0.4, -0.3, 0.0);
    EXPECT_EQ(w(0), 0.0);
    EXPECT_EQ(w(1), 0.0);
    EXPECT_NEAR(2.0 * w(2), 2.0 * sol.mid_surface_deflection(0.4, -0.3), 1e-15);
  }
}

TEST(PlateBending, Examples) {
  const ComplianceMatrix6 classical = invert_to_D(build_C(MaterialParams3D::isotropic(2, 1)));
  EXPECT_EQ(solve_plate_bending({0.0, 1.0, 0.1, 1, 1}, classical).alpha(1, 6), 0.0);

  const ComplianceMatrix6 d = d_m1();
  const PlateBendingSolution sol = solve_plate_bending({0.0, 1.0, 0.1, 1, 1}, d);
  EXPECT_NEAR(sol.alpha(2, 6), d.slot(2, 2), 1e-15);
  EXPECT_NEAR(sol.alpha(1, 5), d.slot(1, 2), 1e-15);
  EXPECT_NEAR(2 * sol.alpha(1, 6), d.slot(3, 2), 1e-15);
  EXPECT_NE(d.slot(3, 2), 0.0);
  EXPECT_NEAR(sol.alpha(3, 4), -0.5 * d.slot(3, 2), 1e-15);
}

TEST(PlateBending, CrossTermVanishesWhenBalanced) {
  const ComplianceMatrix6 d = d_m1();
  // D31 c1 + D32 c2 = 0 with D32 = -D31 forces c1 = c2.
  const PlateBendingSolution sol = solve_plate_bending({0.7, 0.7, 0.1, 1, 1}, d);
  EXPECT_NEAR(d.slot(3, 1) * 0.7 + d.slot(3, 2) * 0.7, 0.0, 1e-16);
  EXPECT_EQ(sol.alpha(3, 4), 0.0);
}

TEST(PlateBending, StrainsReproducedExactly) {
  const PlateBendingSolution sol = solve_plate_bending({1.0, -0.5, 0.2, 1, 1}, d_m1());
  for (double z : {-0.2, 0.05, 0.2}) {
    const StrainVec6 got = kinematic_strain(sol.displacement.gradient(0.3, 0.6, z));
    EXPECT_LT((got.values - sol.strain(0.3, 0.6, z).values).cwiseAbs().maxCoeff(), 1e-15);
  }
}
