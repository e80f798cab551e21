#pragma once

// Six-slot packing of symmetric second-rank tensors.
//
// The ordering is NOT the conventional (11,22,33,23,13,12) one. Every matrix
// in this library is indexed as
//
//   slot:    1    2    3    4    5    6
//   stress: s11  s22  s12  s31  s32  s33
//   strain: e11  e22 2e12 2e31 2e32  e33
//
// i.e. slot 3 holds the in-plane shear and slot 6 the axial normal component,
// and strain shear slots carry the engineering factor 2. Conversion to the
// conventional ordering exists only for CSV export (see to_conventional_order).

#include <Eigen/Dense>
#include <array>
#include <cmath>

namespace asymel {

using Vector6 = Eigen::Matrix<double, 6, 1>;
using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Matrix3 = Eigen::Matrix3d;

/// Symmetric 3x3 tensor stored by its six independent components.
struct SymTensor3 {
  double t11 = 0.0;
  double t22 = 0.0;
  double t33 = 0.0;
  double t12 = 0.0;
  double t31 = 0.0;
  double t32 = 0.0;

  static SymTensor3 from_matrix(const Matrix3& m) {
    return {m(0, 0), m(1, 1), m(2, 2), 0.5 * (m(0, 1) + m(1, 0)), 0.5 * (m(2, 0) + m(0, 2)),
            0.5 * (m(2, 1) + m(1, 2))};
  }

  Matrix3 matrix() const {
    Matrix3 m;
    m << t11, t12, t31,  //
        t12, t22, t32,   //
        t31, t32, t33;
    return m;
  }

  friend bool operator==(const SymTensor3&, const SymTensor3&) = default;
};

/// Stress in slot order (s11, s22, s12, s31, s32, s33).
struct StressVec6 {
  Vector6 values = Vector6::Zero();

  StressVec6() = default;
  explicit StressVec6(const Vector6& v) : values(v) {}

  double operator[](int slot) const { return values(slot); }
  double& operator[](int slot) { return values(slot); }
};

/// Strain in slot order (e11, e22, 2e12, 2e31, 2e32, e33).
struct StrainVec6 {
  Vector6 values = Vector6::Zero();

  StrainVec6() = default;
  explicit StrainVec6(const Vector6& v) : values(v) {}

  double operator[](int slot) const { return values(slot); }
  double& operator[](int slot) { return values(slot); }
};

inline StressVec6 to_voigt_stress(const SymTensor3& t) {
  Vector6 v;
  v << t.t11, t.t22, t.t12, t.t31, t.t32, t.t33;
  return StressVec6(v);
}

inline StrainVec6 to_voigt_strain(const SymTensor3& t) {
  Vector6 v;
  v << t.t11, t.t22, 2.0 * t.t12, 2.0 * t.t31, 2.0 * t.t32, t.t33;
  return StrainVec6(v);
}

inline SymTensor3 from_voigt(const StressVec6& s) {
  return {s[0], s[1], s[5], s[2], s[3], s[4]};
}

inline SymTensor3 from_voigt(const StrainVec6& e) {
  return {e[0], e[1], e[5], 0.5 * e[2], 0.5 * e[3], 0.5 * e[4]};
}

/// Rotation of the coordinate axes by `phi` radians about x3:
/// x1' = x1 cos + x2 sin, x2' = -x1 sin + x2 cos. Tensors transform as Q t Q^T.
inline Matrix3 axis_rotation(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  Matrix3 q;
  q << c, s, 0.0,  //
      -s, c, 0.0,  //
      0.0, 0.0, 1.0;
  return q;
}

/// 6x6 map e' = T e for strain slots (engineering shears).
/// Slots {1,2,3,6} and {4,5} never mix.
inline Matrix6 strain_rotation_matrix(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  Matrix6 t = Matrix6::Zero();
  t(0, 0) = c * c;
  t(0, 1) = s * s;
  t(0, 2) = c * s;
  t(1, 0) = s * s;
  t(1, 1) = c * c;
  t(1, 2) = -c * s;
  t(2, 0) = -2.0 * c * s;
  t(2, 1) = 2.0 * c * s;
  t(2, 2) = c * c - s * s;
  t(3, 3) = c;
  t(3, 4) = s;
  t(4, 3) = -s;
  t(4, 4) = c;
  t(5, 5) = 1.0;
  return t;
}

/// 6x6 map s' = T s for stress slots (no shear factor).
/// Equal to S^-1 T_strain S with S = diag(1,1,2,2,2,1), since e = S s for the same tensor.
inline Matrix6 stress_rotation_matrix(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  Matrix6 t = Matrix6::Zero();
  t(0, 0) = c * c;
  t(0, 1) = s * s;
  t(0, 2) = 2.0 * c * s;
  t(1, 0) = s * s;
  t(1, 1) = c * c;
  t(1, 2) = -2.0 * c * s;
  t(2, 0) = -c * s;
  t(2, 1) = c * s;
  t(2, 2) = c * c - s * s;
  t(3, 3) = c;
  t(3, 4) = s;
  t(4, 3) = -s;
  t(4, 4) = c;
  t(5, 5) = 1.0;
  return t;
}

/// Slot permutation to the conventional (11,22,33,23,13,12) ordering.
/// Index i of the result reads slot kConventionalFromSlot[i] of the input.
inline constexpr std::array<int, 6> kConventionalFromSlot = {0, 1, 5, 4, 3, 2};

inline Vector6 to_conventional_order(const Vector6& slots) {
  Vector6 out;
  for (int i = 0; i < 6; ++i) out(i) = slots(kConventionalFromSlot[i]);
  return out;
}

}  // namespace asymel
