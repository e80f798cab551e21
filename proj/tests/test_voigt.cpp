#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "asymel/voigt.hpp"
#include "oracles.hpp"

using namespace asymel;

namespace {

SymTensor3 random_tensor(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
}

double max_diff(const Vector6& a, const Vector6& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(VoigtStress, SlotOrdering) {
  EXPECT_EQ(to_voigt_stress({1, 0, 0, 0, 0, 0}).values, (Vector6() << 1, 0, 0, 0, 0, 0).finished());
  SymTensor3 t;
  t.t12 = 2.0;
  EXPECT_EQ(to_voigt_stress(t)[2], 2.0);
  t = {};
  t.t31 = 0.7;
  t.t32 = -1.3;
  const StressVec6 s = to_voigt_stress(t);
  EXPECT_EQ(s[3], 0.7);
  EXPECT_EQ(s[4], -1.3);
  t = {};
  t.t33 = 5.0;
  EXPECT_EQ(to_voigt_stress(t)[5], 5.0);
}

TEST(VoigtStrain, EngineeringShears) {
  SymTensor3 t;
  t.t12 = 0.5;
  EXPECT_EQ(to_voigt_strain(t)[2], 1.0);
  EXPECT_EQ(to_voigt_strain({1, 1, 1, 0, 0, 0}).values, (Vector6() << 1, 1, 0, 0, 0, 1).finished());
  t = {};
  t.t31 = 0.25;
  EXPECT_EQ(to_voigt_strain(t)[3], 0.5);
}

TEST(Voigt, RoundTripIsExact) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const SymTensor3 t = random_tensor(rng);
    EXPECT_EQ(from_voigt(to_voigt_stress(t)), t);
    EXPECT_EQ(from_voigt(to_voigt_strain(t)), t);
    EXPECT_EQ(SymTensor3::from_matrix(t.matrix()), t);
  }
}

TEST(StrainRotation, Examples) {
  EXPECT_EQ(strain_rotation_matrix(0.0), Matrix6::Identity());
  const Vector6 e1 = (Vector6() << 1, 0, 0, 0, 0, 0).finished();
  EXPECT_LT(max_diff(strain_rotation_matrix(std::numbers::pi / 2) * e1, (Vector6() << 0, 1, 0, 0, 0, 0).finished()),
            1e-15);
  const double gamma = 0.3;
  const Vector6 shear = (Vector6() << 0, 0, 2 * gamma, 0, 0, 0).finished();
  const Vector6 rotated = strain_rotation_matrix(std::numbers::pi / 4) * shear;
  EXPECT_NEAR(rotated(0), gamma, 1e-15);
  EXPECT_NEAR(rotated(1), -gamma, 1e-15);
  EXPECT_NEAR(rotated(2), 0.0, 1e-15);
}

TEST(StressRotation, Examples) {
  EXPECT_EQ(stress_rotation_matrix(0.0), Matrix6::Identity());
  const Vector6 s = (Vector6() << 1, 2, 3, 4, 5, 6).finished();
  const Vector6 r = stress_rotation_matrix(std::numbers::pi) * s;
  EXPECT_LT(max_diff(r, (Vector6() << 1, 2, 3, -4, -5, 6).finished()), 1e-14);
  const Matrix6 composed = stress_rotation_matrix(0.3) * stress_rotation_matrix(0.4);
  EXPECT_LT((composed - stress_rotation_matrix(0.7)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Rotation, GroupAndInverse) {
  for (double a : {-2.1, 0.0, 0.4, 1.3, 5.9}) {
    for (double b : {-0.7, 0.25, 3.0}) {
      EXPECT_LT((strain_rotation_matrix(a) * strain_rotation_matrix(b) - strain_rotation_matrix(a + b))
                    .cwiseAbs()
                    .maxCoeff(),
                1e-14);
    }
    EXPECT_LT((strain_rotation_matrix(a) * strain_rotation_matrix(-a) - Matrix6::Identity()).cwiseAbs().maxCoeff(),
              1e-14);
    EXPECT_LT((stress_rotation_matrix(a) * stress_rotation_matrix(-a) - Matrix6::Identity()).cwiseAbs().maxCoeff(),
              1e-14);
  }
}

TEST(Rotation, MatchesTensorConjugation) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);
  for (int i = 0; i < 200; ++i) {
    const SymTensor3 t = random_tensor(rng);
    const double phi = angle(rng);
    const SymTensor3 rotated = SymTensor3::from_matrix(oracle::rotate_tensor(t.matrix(), phi));
    EXPECT_LT(max_diff(stress_rotation_matrix(phi) * to_voigt_stress(t).values, to_voigt_stress(rotated).values),
              1e-13);
    EXPECT_LT(max_diff(strain_rotation_matrix(phi) * to_voigt_strain(t).values, to_voigt_strain(rotated).values),
              1e-13);
  }
}

TEST(Rotation, AxisRotationMatchesOracle) {
  const Eigen::Matrix3d t = Eigen::Matrix3d::Identity();
  for (double phi : {0.1, 1.0, 2.5}) {
    EXPECT_LT((axis_rotation(phi) * t * axis_rotation(phi).transpose() - oracle::rotate_tensor(t, phi)).norm(),
              1e-15);
  }
}

TEST(Rotation, BlocksNeverMix) {
  const int a[4] = {0, 1, 2, 5};
  const int b[2] = {3, 4};
  for (double phi : {0.2, 1.7, 4.0}) {
    for (const Matrix6& t : {strain_rotation_matrix(phi), stress_rotation_matrix(phi)}) {
      for (int i : a)
        for (int j : b) {
          EXPECT_EQ(t(i, j), 0.0);
          EXPECT_EQ(t(j, i), 0.0);
        }
    }
  }
}

TEST(Voigt, ConventionalOrder) {
  const Vector6 slots = (Vector6() << 11, 22, 12, 31, 32, 33).finished();
  EXPECT_EQ(to_conventional_order(slots), (Vector6() << 11, 22, 33, 32, 31, 12).finished());
}
