#pragma once

// Exact polynomial solutions with linear stress fields: the general family
// (linear stresses, linear strains, quadratic displacements) and its two
// boundary-value specialisations, circular-shaft torsion and plate bending.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "asymel/errors.hpp"
#include "asymel/material.hpp"
#include "asymel/voigt.hpp"

namespace asymel {

using Vector3 = Eigen::Vector3d;

/// Constant volume force (F1, F2, F3).
struct BodyForce {
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
};

/// Stress coefficients before the equilibrium equalities are applied:
/// c4, c5, c6 are not free and are computed by complete_stress_coeffs.
struct PartialStressCoeffs {
  Vector6 a = Vector6::Zero();
  Vector6 b = Vector6::Zero();
  Vector6 p = Vector6::Zero();
  std::array<double, 3> c123{};
};

/// s_j = a_j x + b_j y + c_j z + p_j, slot j = 1..6 (stored 0-based).
struct StressPolyCoeffs {
  Vector6 a = Vector6::Zero();
  Vector6 b = Vector6::Zero();
  Vector6 c = Vector6::Zero();
  Vector6 p = Vector6::Zero();

  StressVec6 operator()(double x, double y, double z) const { return StressVec6(a * x + b * y + c * z + p); }

  /// Left-hand side of the equilibrium equations (div s + F), constant in space.
  Vector3 equilibrium_residual(const BodyForce& f) const {
    return {a(0) + b(2) + c(3) + f.f1, a(2) + b(1) + c(4) + f.f2, a(3) + b(4) + c(5) + f.f3};
  }
};

/// e_k = f_k x + g_k y + h_k z + e_k.
struct StrainPolyCoeffs {
  Vector6 f = Vector6::Zero();
  Vector6 g = Vector6::Zero();
  Vector6 h = Vector6::Zero();
  Vector6 e = Vector6::Zero();

  StrainVec6 operator()(double x, double y, double z) const { return StrainVec6(f * x + g * y + h * z + e); }
};

inline StressPolyCoeffs complete_stress_coeffs(const PartialStressCoeffs& in, const BodyForce& force) {
  StressPolyCoeffs s;
  s.a = in.a;
  s.b = in.b;
  s.p = in.p;
  s.c(0) = in.c123[0];
  s.c(1) = in.c123[1];
  s.c(2) = in.c123[2];
  s.c(3) = -in.a(0) - in.b(2) - force.f1;
  s.c(4) = -in.a(2) - in.b(1) - force.f2;
  s.c(5) = -in.a(3) - in.b(4) - force.f3;
  return s;
}

inline StrainPolyCoeffs strain_coeffs(const ComplianceMatrix6& d, const StressPolyCoeffs& s) {
  const Matrix6& m = d.matrix();
  return {m * s.a, m * s.b, m * s.c, m * s.p};
}

/// w_i = 1/2 (A_i1 x^2 + A_i2 y^2 + A_i3 z^2) + A_i4 xy + A_i5 xz + A_i6 yz
///       + lin_i x + lin_y_i y + lin_z_i z + offset_i
/// with A = quadratic (row i = component, column j = 1..6 stored 0-based).
struct DisplacementPoly {
  Eigen::Matrix<double, 3, 6> quadratic = Eigen::Matrix<double, 3, 6>::Zero();
  Vector3 linear_x = Vector3::Zero();  // alpha_i
  Vector3 linear_y = Vector3::Zero();  // beta_i
  Vector3 linear_z = Vector3::Zero();  // gamma_i
  Vector3 offset = Vector3::Zero();    // delta_i

  double alpha(int i, int j) const { return quadratic(i - 1, j - 1); }

  Vector3 operator()(double x, double y, double z) const {
    Vector3 w;
    for (int i = 0; i < 3; ++i) {
      const auto q = quadratic.row(i);
      w(i) = 0.5 * (q(0) * x * x + q(1) * y * y + q(2) * z * z) + q(3) * x * y + q(4) * x * z + q(5) * y * z +
             linear_x(i) * x + linear_y(i) * y + linear_z(i) * z + offset(i);
    }
    return w;
  }

  /// grad(i, k) = d w_i / d x_k, evaluated analytically.
  Matrix3 gradient(double x, double y, double z) const {
    Matrix3 g;
    for (int i = 0; i < 3; ++i) {
      const auto q = quadratic.row(i);
      g(i, 0) = q(0) * x + q(3) * y + q(4) * z + linear_x(i);
      g(i, 1) = q(1) * y + q(3) * x + q(5) * z + linear_y(i);
      g(i, 2) = q(2) * z + q(4) * x + q(5) * y + linear_z(i);
    }
    return g;
  }
};

/// Strain slots from a displacement gradient (grad(i, k) = d w_i / d x_k).
inline StrainVec6 kinematic_strain(const Matrix3& grad) {
  Vector6 e;
  e << grad(0, 0), grad(1, 1), grad(0, 1) + grad(1, 0), grad(0, 2) + grad(2, 0), grad(1, 2) + grad(2, 1),
      grad(2, 2);
  return StrainVec6(e);
}

/// Quadratic displacement reproducing a linear strain field, with translations
/// and rotations at the origin removed (w = 0, w1,3 = w2,3 = 0, w2,1 = w1,2).
inline DisplacementPoly displacement_coeffs(const StrainPolyCoeffs& s) {
  // 1-based accessors keep the table readable.
  auto f = [&](int k) { return s.f(k - 1); };
  auto g = [&](int k) { return s.g(k - 1); };
  auto h = [&](int k) { return s.h(k - 1); };
  auto e = [&](int k) { return s.e(k - 1); };

  DisplacementPoly w;
  auto set = [&](int i, int j, double v) { w.quadratic(i - 1, j - 1) = v; };
  set(1, 1, f(1));
  set(1, 2, g(3) - f(2));
  set(1, 3, h(4) - f(6));
  set(1, 4, g(1));
  set(1, 5, h(1));
  set(1, 6, 0.5 * (h(3) + g(4) - f(5)));

  set(2, 1, f(3) - g(1));
  set(2, 2, g(2));
  set(2, 3, h(5) - g(6));
  set(2, 4, f(2));
  set(2, 5, 0.5 * (f(5) + h(3) - g(4)));
  set(2, 6, h(2));

  set(3, 1, f(4) - h(1));
  set(3, 2, g(5) - h(2));
  set(3, 3, h(6));
  set(3, 4, 0.5 * (f(5) - h(3) + g(4)));
  set(3, 5, f(6));
  set(3, 6, g(6));

  w.linear_x = {e(1), 0.5 * e(3), e(4)};
  w.linear_y = {0.5 * e(3), e(2), e(5)};
  // Rigid-body elimination at the origin.
  w.linear_z = {0.0, 0.0, e(6)};
  w.offset = Vector3::Zero();
  return w;
}

/// Closures over a 3D solution, consumed by the verifier and the exporter.
struct Field3D {
  std::function<Vector3(double, double, double)> displacement;
  std::function<StrainVec6(double, double, double)> strain;
  std::function<StressVec6(double, double, double)> stress;
  std::function<bool(double, double, double)> contains;
  double stress_scale = 1.0;   // characteristic stress magnitude
  double length_scale = 1.0;   // characteristic length
};

// ---------------------------------------------------------------------------
// Circular shaft torsion
// ---------------------------------------------------------------------------

/// Shaft of radius R and length L along x3, origin at the mid-section,
/// twisted by end shear stress tau * r / R.
struct TorsionProblem {
  double tau = 1.0;
  double radius = 1.0;
  double length = 1.0;
};

struct CylindricalDisplacement {
  double w_r = 0.0;
  double w_phi = 0.0;
  double w_3 = 0.0;
};

struct TorsionSolution {
  TorsionProblem problem;
  double a5 = 0.0;
  double d44 = 0.0;
  double d45 = 0.0;
  StressPolyCoeffs stress;
  StrainPolyCoeffs strain;
  DisplacementPoly displacement;

  /// Torsion angle per unit length, D44 a5.
  double twist_rate() const { return d44 * a5; }

  CylindricalDisplacement cylindrical(double r, double z) const {
    return {0.0, d44 * a5 * r * z, 0.5 * d45 * a5 * r * r};
  }

  /// Cross-section shear s_{z phi} = s5 cos(phi) - s4 sin(phi).
  double section_shear(double x, double y) const {
    const StressVec6 s = stress(x, y, 0.0);
    const double r = std::hypot(x, y);
    if (r == 0.0) return 0.0;
    return (s[4] * x - s[3] * y) / r;
  }

  /// Shear in the axial section, s_{z r} = s4 cos(phi) + s5 sin(phi).
  double axial_section_shear(double x, double y) const {
    const StressVec6 s = stress(x, y, 0.0);
    const double r = std::hypot(x, y);
    if (r == 0.0) return 0.0;
    return (s[3] * x + s[4] * y) / r;
  }

  bool contains(double x, double y, double z) const {
    constexpr double kSlack = 1e-12;
    const double r = problem.radius;
    return x * x + y * y <= r * r * (1.0 + kSlack) && std::abs(z) <= 0.5 * problem.length * (1.0 + kSlack);
  }

  Field3D field() const {
    const TorsionSolution self = *this;
    return {[self](double x, double y, double z) { return self.displacement(x, y, z); },
            [self](double x, double y, double z) { return self.strain(x, y, z); },
            [self](double x, double y, double z) { return self.stress(x, y, z); },
            [self](double x, double y, double z) { return self.contains(x, y, z); },
            std::abs(problem.tau) > 0.0 ? std::abs(problem.tau) : 1.0,
            problem.radius};
  }
};

inline TorsionSolution solve_torsion(const TorsionProblem& tp, const ComplianceMatrix6& d) {
  if (!(tp.radius > 0.0)) throw InvalidParameter("shaft radius must be positive");
  if (!(tp.length > 0.0)) throw InvalidParameter("shaft length must be positive");
  TorsionSolution sol;
  sol.problem = tp;
  sol.a5 = tp.tau / tp.radius;
  sol.d44 = d.slot(4, 4);
  sol.d45 = d.slot(4, 5);

  PartialStressCoeffs in;
  in.a(4) = sol.a5;   // s5 = a5 x
  in.b(3) = -sol.a5;  // s4 = -a5 y, traction-free lateral surface
  sol.stress = complete_stress_coeffs(in, {});
  sol.strain = strain_coeffs(d, sol.stress);
  sol.displacement = displacement_coeffs(sol.strain);
  return sol;
}

// ---------------------------------------------------------------------------
// Biaxial plate bending
// ---------------------------------------------------------------------------

/// Plate |x| <= a, |y| <= b, |z| <= h bent by s1 = c1 z, s2 = c2 z.
struct PlateBendProblem {
  double c1 = 0.0;
  double c2 = 0.0;
  double h = 1.0;
  double a = 1.0;
  double b = 1.0;
};

struct PlateBendingSolution {
  PlateBendProblem problem;
  StressPolyCoeffs stress;
  StrainPolyCoeffs strain;
  DisplacementPoly displacement;

  double alpha(int i, int j) const { return displacement.alpha(i, j); }

  /// 2 w3 at z = 0: alpha31 x^2 + alpha32 y^2 + 2 alpha34 xy.
  double mid_surface_deflection(double x, double y) const {
    return 0.5 * (alpha(3, 1) * x * x + alpha(3, 2) * y * y) + alpha(3, 4) * x * y;
  }

  bool contains(double x, double y, double z) const {
    constexpr double kSlack = 1e-12;
    return std::abs(x) <= problem.a * (1.0 + kSlack) && std::abs(y) <= problem.b * (1.0 + kSlack) &&
           std::abs(z) <= problem.h * (1.0 + kSlack);
  }

  Field3D field() const {
    const PlateBendingSolution self = *this;
    const double scale = std::max(std::abs(problem.c1), std::abs(problem.c2)) * problem.h;
    return {[self](double x, double y, double z) { return self.displacement(x, y, z); },
            [self](double x, double y, double z) { return self.strain(x, y, z); },
            [self](double x, double y, double z) { return self.stress(x, y, z); },
            [self](double x, double y, double z) { return self.contains(x, y, z); },
            scale > 0.0 ? scale : 1.0,
            problem.h};
  }
};

/// Bending solution through the general polynomial family. Besides the
/// alpha_15, alpha_16, alpha_25, alpha_26, alpha_31, alpha_32, alpha_34
/// coefficients this carries alpha_33 = D61 c1 + D62 c2, the z^2 term of w3
/// needed to reproduce e6 whenever D61 != 0.
inline PlateBendingSolution solve_plate_bending(const PlateBendProblem& pp, const ComplianceMatrix6& d) {
  if (!(pp.h > 0.0)) throw InvalidParameter("plate half-thickness must be positive");
  if (!(pp.a > 0.0) || !(pp.b > 0.0)) throw InvalidParameter("plate half-extents must be positive");
  PlateBendingSolution sol;
  sol.problem = pp;
  PartialStressCoeffs in;
  in.c123 = {pp.c1, pp.c2, 0.0};
  sol.stress = complete_stress_coeffs(in, {});
  sol.strain = strain_coeffs(d, sol.stress);
  sol.displacement = displacement_coeffs(sol.strain);
  return sol;
}

}  // namespace asymel
