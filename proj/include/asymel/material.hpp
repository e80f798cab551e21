#pragma once

// Asymmetric stiffness family invariant under rotations about x3, its
// compliance, and the plane-strain reduction with its constitutive relations.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <sstream>
#include <string>
#include <numbers>
#include <vector>

#include "asymel/errors.hpp"
#include "asymel/voigt.hpp"

namespace asymel {

/// Raw coordinates of a matrix in the eight-parameter family. No sign checks;
/// use MaterialParams3D for a physical material.
struct FamilyCoefficients {
  double c11 = 0.0;
  double c13 = 0.0;
  double c16 = 0.0;
  double c33 = 0.0;
  double c44 = 0.0;
  double c45 = 0.0;
  double c61 = 0.0;
  double c66 = 0.0;

  std::array<double, 8> as_array() const { return {c11, c13, c16, c33, c44, c45, c61, c66}; }
  static FamilyCoefficients from_array(const std::array<double, 8>& a) {
    return {a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]};
  }
};

inline constexpr std::array<const char*, 8> kFamilyParameterNames = {"C11", "C13", "C16", "C33",
                                                                     "C44", "C45", "C61", "C66"};

/// The eight independent stiffness constants. C11, C33, C44, C66 must be
/// positive and finite; C13, C45 may take either sign; C16, C61 are free.
class MaterialParams3D {
 public:
  explicit MaterialParams3D(const FamilyCoefficients& c) : c_(c) {
    for (double v : c.as_array()) {
      if (!std::isfinite(v)) throw InvalidParameter("material parameters must be finite");
    }
    require_positive("C11", c.c11);
    require_positive("C33", c.c33);
    require_positive("C44", c.c44);
    require_positive("C66", c.c66);
  }

  const FamilyCoefficients& coefficients() const noexcept { return c_; }

  /// Isotropic material with Lame constants lambda, mu.
  static MaterialParams3D isotropic(double lambda, double mu) {
    return MaterialParams3D({.c11 = lambda + 2.0 * mu,
                             .c13 = 0.0,
                             .c16 = lambda,
                             .c33 = mu,
                             .c44 = mu,
                             .c45 = 0.0,
                             .c61 = lambda,
                             .c66 = lambda + 2.0 * mu});
  }

 private:
  static void require_positive(const char* name, double v) {
    if (!(v > 0.0)) throw InvalidParameter(std::string(name) + " must be positive");
  }

  FamilyCoefficients c_;
};

/// Assembles the 6x6 family matrix from raw coordinates. C12 = C11 - 2 C33.
inline Matrix6 family_matrix(const FamilyCoefficients& p) {
  const double c12 = p.c11 - 2.0 * p.c33;
  Matrix6 c;
  c << p.c11, c12, p.c13, 0.0, 0.0, p.c16,        //
      c12, p.c11, -p.c13, 0.0, 0.0, p.c16,        //
      -p.c13, p.c13, p.c33, 0.0, 0.0, 0.0,        //
      0.0, 0.0, 0.0, p.c44, p.c45, 0.0,           //
      0.0, 0.0, 0.0, -p.c45, p.c44, 0.0,          //
      p.c61, p.c61, 0.0, 0.0, 0.0, p.c66;
  return c;
}

/// Reads the family coordinates back from a matrix (assumes it lies in the family).
inline FamilyCoefficients family_coordinates(const Matrix6& c) {
  return {c(0, 0), c(0, 2), c(0, 5), c(2, 2), c(3, 3), c(3, 4), c(5, 0), c(5, 5)};
}

/// Stiffness matrix of a valid material. Only build_C creates one.
class ElasticityMatrix6 {
 public:
  const Matrix6& matrix() const noexcept { return m_; }
  const FamilyCoefficients& coefficients() const noexcept { return p_; }
  /// 1-based access matching the slot numbering (C(1,2) is C12).
  double slot(int row, int col) const { return m_(row - 1, col - 1); }

 private:
  friend ElasticityMatrix6 build_C(const MaterialParams3D&);
  explicit ElasticityMatrix6(const FamilyCoefficients& p) : m_(family_matrix(p)), p_(p) {}

  Matrix6 m_;
  FamilyCoefficients p_;
};

inline ElasticityMatrix6 build_C(const MaterialParams3D& params) {
  return ElasticityMatrix6(params.coefficients());
}

class ComplianceMatrix6 {
 public:
  const Matrix6& matrix() const noexcept { return m_; }
  double slot(int row, int col) const { return m_(row - 1, col - 1); }

 private:
  friend ComplianceMatrix6 invert_to_D(const ElasticityMatrix6&);
  explicit ComplianceMatrix6(const Matrix6& m) : m_(m) {}

  Matrix6 m_;
};

/// max over angles of ||T_stress C - C T_strain||_inf / ||C||_inf.
inline double check_rotational_invariance(const Matrix6& c, std::span<const double> angles) {
  const double norm = c.cwiseAbs().rowwise().sum().maxCoeff();
  if (norm == 0.0) return 0.0;
  double worst = 0.0;
  for (double phi : angles) {
    const Matrix6 diff = stress_rotation_matrix(phi) * c - c * strain_rotation_matrix(phi);
    worst = std::max(worst, diff.cwiseAbs().rowwise().sum().maxCoeff() / norm);
  }
  return worst;
}

/// `count` angles spread uniformly over [0, 2pi).
inline std::vector<double> uniform_angles(int count) {
  std::vector<double> a;
  a.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) a.push_back(2.0 * std::numbers::pi * i / count);
  return a;
}

namespace detail {

inline Eigen::Matrix2d checked_inverse(const Eigen::Matrix2d& block, const char* name) {
  constexpr double kMaxCondition = 1e12;
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(block);
  const auto sv = svd.singularValues();
  if (!(sv(1) > 0.0) || sv(0) / sv(1) > kMaxCondition) {
    std::ostringstream msg;
    msg << name << " block is singular (condition number "
        << (sv(1) > 0.0 ? sv(0) / sv(1) : INFINITY) << ")";
    throw SingularMaterial(msg.str());
  }
  const double det = block(0, 0) * block(1, 1) - block(0, 1) * block(1, 0);
  Eigen::Matrix2d inv;
  inv << block(1, 1), -block(0, 1), -block(1, 0), block(0, 0);
  return inv / det;
}

}  // namespace detail

/// D = C^-1 computed block by block so that the zero pattern of D is exact.
///
/// The {4,5} block is inverted directly. The {1,2,3,6} block decouples under
/// u = e1 + e2, v = e1 - e2 into
///   (s1 + s2, s6) = [[C11 + C12, 2 C16], [C61, C66]] (u, e6)
///   (s1 - s2, s3) = [[C11 - C12, 2 C13], [-C13, C33]] (v, e3)
/// which is why D36 = D63 = 0 hold identically.
inline ComplianceMatrix6 invert_to_D(const ElasticityMatrix6& stiffness) {
  const FamilyCoefficients& p = stiffness.coefficients();
  const double c12 = p.c11 - 2.0 * p.c33;

  Eigen::Matrix2d sum_block;
  sum_block << p.c11 + c12, 2.0 * p.c16, p.c61, p.c66;
  Eigen::Matrix2d diff_block;
  diff_block << p.c11 - c12, 2.0 * p.c13, -p.c13, p.c33;
  Eigen::Matrix2d shear_block;
  shear_block << p.c44, p.c45, -p.c45, p.c44;

  const Eigen::Matrix2d si = detail::checked_inverse(sum_block, "axial/dilatation");
  const Eigen::Matrix2d di = detail::checked_inverse(diff_block, "in-plane shear");

  // Condition check only; the closed form below keeps D44 = D55 bit-exact.
  (void)detail::checked_inverse(shear_block, "transverse shear");
  const double det45 = p.c44 * p.c44 + p.c45 * p.c45;

  Matrix6 d = Matrix6::Zero();
  d(0, 0) = 0.5 * (si(0, 0) + di(0, 0));
  d(0, 1) = 0.5 * (si(0, 0) - di(0, 0));
  d(0, 2) = 0.5 * di(0, 1);
  d(0, 5) = 0.5 * si(0, 1);
  d(1, 0) = d(0, 1);
  d(1, 1) = d(0, 0);
  d(1, 2) = -d(0, 2);
  d(1, 5) = d(0, 5);
  d(2, 0) = di(1, 0);
  d(2, 1) = -di(1, 0);
  d(2, 2) = di(1, 1);
  d(3, 3) = p.c44 / det45;
  d(3, 4) = -p.c45 / det45;
  d(4, 3) = p.c45 / det45;
  d(4, 4) = p.c44 / det45;
  d(5, 0) = si(1, 0);
  d(5, 1) = si(1, 0);
  d(5, 5) = si(1, 1);
  return ComplianceMatrix6(d);
}

inline StrainVec6 strain_from_stress_3d(const ComplianceMatrix6& d, const StressVec6& s) {
  return StrainVec6(d.matrix() * s.values);
}

inline StressVec6 stress_from_strain_3d(const ElasticityMatrix6& c, const StrainVec6& e) {
  return StressVec6(c.matrix() * e.values);
}

struct SylvesterResult {
  bool positive_definite = false;
  std::array<double, 6> minors{};
};

/// Leading principal minors of the symmetric part (C + C^T)/2, in slot order.
inline SylvesterResult sylvester_check(const Matrix6& c) {
  const Matrix6 sym = 0.5 * (c + c.transpose());
  SylvesterResult r;
  r.positive_definite = true;
  for (int k = 1; k <= 6; ++k) {
    const Eigen::MatrixXd lead = sym.topLeftCorner(k, k);
    r.minors[static_cast<std::size_t>(k - 1)] = lead.determinant();
    if (!(r.minors[static_cast<std::size_t>(k - 1)] > 0.0)) r.positive_definite = false;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Plane strain
// ---------------------------------------------------------------------------

/// Plane kinetic parameters. lambda0 > 0, mu > 0, mu0 any real.
class PlaneMaterial {
 public:
  PlaneMaterial(double lambda0, double mu0, double mu) : lambda0_(lambda0), mu0_(mu0), mu_(mu) {
    if (!std::isfinite(lambda0) || !std::isfinite(mu0) || !std::isfinite(mu))
      throw InvalidPlaneMaterial("plane material parameters must be finite");
    if (!(lambda0 > 0.0)) throw InvalidPlaneMaterial("lambda0 must be positive");
    if (!(mu > 0.0)) throw InvalidPlaneMaterial("mu must be positive");
  }

  /// Classical material: lambda0 = lambda + mu, mu0 = 0.
  static PlaneMaterial classical(double lambda, double mu) { return {lambda + mu, 0.0, mu}; }

  double lambda0() const noexcept { return lambda0_; }
  double mu0() const noexcept { return mu0_; }
  double mu() const noexcept { return mu_; }
  double kappa0_sq() const noexcept { return mu_ * mu_ + mu0_ * mu0_; }
  std::complex<double> kappa() const noexcept { return {mu_, mu0_}; }

 private:
  double lambda0_;
  double mu0_;
  double mu_;
};

/// 3x3 plane-strain stiffness acting on (e1, e2, e3).
struct PlaneStiffness3 {
  Matrix3 a = Matrix3::Zero();
};

struct PlaneReduction {
  PlaneStiffness3 stiffness;
  PlaneMaterial material;
};

inline PlaneReduction plane_reduce(const ElasticityMatrix6& c) {
  PlaneStiffness3 a;
  a.a = c.matrix().topLeftCorner<3, 3>();
  const FamilyCoefficients& p = c.coefficients();
  const double lambda0 = p.c11 - p.c33;
  if (!(lambda0 > 0.0)) throw InvalidPlaneMaterial("C11 - C33 must be positive for plane strain");
  return {a, PlaneMaterial(lambda0, p.c13, p.c33)};
}

/// Displacement gradient of w = (u, v): ux = du/dx, uy = du/dy, ...
struct DisplacementGradient2 {
  double ux = 0.0;
  double uy = 0.0;
  double vx = 0.0;
  double vy = 0.0;
};

/// In-plane strain slots (e1, e2, e3) = (u,x ; v,y ; u,y + v,x).
struct PlaneStrain {
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
};

struct PlaneStress {
  double s11 = 0.0;
  double s22 = 0.0;
  double s12 = 0.0;
};

inline PlaneStrain plane_strain(const DisplacementGradient2& g) {
  return {g.ux, g.vy, g.uy + g.vx};
}

/// T = I lambda0 div w + 2 M gamma with M = [[mu, mu0], [-mu0, mu]].
inline PlaneStress stress_from_strain_2d(const PlaneMaterial& m, const PlaneStrain& e) {
  const double div = e.e1 + e.e2;
  const double dev = e.e1 - e.e2;
  const double shear = e.e3;
  return {m.lambda0() * div + m.mu() * dev + m.mu0() * shear,
          m.lambda0() * div - m.mu() * dev - m.mu0() * shear,  //
          m.mu() * shear - m.mu0() * dev};
}

inline PlaneStress stress_from_strain_2d(const PlaneMaterial& m, const DisplacementGradient2& g) {
  return stress_from_strain_2d(m, plane_strain(g));
}

inline PlaneStrain strain_from_stress_2d(const PlaneMaterial& m, const PlaneStress& s) {
  const double inv_l0 = 1.0 / m.lambda0();
  const double inv_k2 = 1.0 / m.kappa0_sq();
  const double sum = s.s11 + s.s22;
  const double diff = s.s11 - s.s22;
  return {0.25 * (inv_l0 * sum + m.mu() * inv_k2 * diff - 2.0 * m.mu0() * inv_k2 * s.s12),
          0.25 * (inv_l0 * sum - m.mu() * inv_k2 * diff + 2.0 * m.mu0() * inv_k2 * s.s12),
          0.5 * inv_k2 * (m.mu0() * diff + 2.0 * m.mu() * s.s12)};
}

}  // namespace asymel
