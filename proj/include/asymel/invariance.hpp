#pragma once

// Numerical re-derivation of the invariant stiffness family: every 6x6 C with
// T_stress(phi) C = C T_strain(phi) for the sampled angles is a nullspace
// vector of a linear system in the 36 entries of C.

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "asymel/errors.hpp"
#include "asymel/voigt.hpp"

namespace asymel {

/// Index of entry C(row, col) (0-based) among the 36 unknowns, row-major.
constexpr int entry_index(int row, int col) { return 6 * row + col; }

struct ConstraintSystem {
  /// 36 rows per angle; row 36k + 6M + N encodes (T_s C - C T_e)_MN = 0 at angles[k].
  Eigen::MatrixXd rows;
  std::vector<double> angles;
};

inline ConstraintSystem build_constraint_system(std::span<const double> angles) {
  if (angles.empty()) throw std::invalid_argument("at least one sample angle is required");
  ConstraintSystem sys;
  sys.angles.assign(angles.begin(), angles.end());
  sys.rows = Eigen::MatrixXd::Zero(36 * static_cast<Eigen::Index>(angles.size()), 36);
  for (std::size_t k = 0; k < angles.size(); ++k) {
    if (!std::isfinite(angles[k])) throw std::invalid_argument("sample angles must be finite");
    const Matrix6 ts = stress_rotation_matrix(angles[k]);
    const Matrix6 te = strain_rotation_matrix(angles[k]);
    const auto base = static_cast<Eigen::Index>(36 * k);
    for (int m = 0; m < 6; ++m) {
      for (int n = 0; n < 6; ++n) {
        const Eigen::Index r = base + entry_index(m, n);
        for (int j = 0; j < 6; ++j) {
          sys.rows(r, entry_index(j, n)) += ts(m, j);
          sys.rows(r, entry_index(m, j)) -= te(j, n);
        }
      }
    }
  }
  return sys;
}

/// Orthonormal (Frobenius) basis of the invariant family.
struct FamilyBasis {
  std::vector<Matrix6> elements;
  int dimension() const { return static_cast<int>(elements.size()); }
};

inline constexpr double kDefaultNullspaceTolerance = 1e-10;
inline const std::vector<double> kDefaultSampleAngles = {0.3, 0.7, 1.1, 2.0};
/// Extra angle appended when testing a sampling for degeneracy.
inline const double kProbeAngle = 0.5 + std::numbers::sqrt2;

namespace detail {

struct NullspaceResult {
  Eigen::MatrixXd vectors;  // 36 x dim
  Eigen::VectorXd singular_values;
};

inline NullspaceResult svd_nullspace(const Eigen::MatrixXd& a, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = tol * (sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  const int dim = static_cast<int>(a.cols()) - rank;
  return {svd.matrixV().rightCols(dim), sv};
}

inline Matrix6 unflatten(const Eigen::VectorXd& v) {
  Matrix6 m;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) m(r, c) = v(entry_index(r, c));
  return m;
}

}  // namespace detail

/// Nullspace of the constraint system. Singular values at or below
/// tol * (largest) count as zero. With `check_sampling`, the sampling is
/// re-solved with kProbeAngle appended and DegenerateSampling is thrown if
/// the dimension drops.
inline FamilyBasis nullspace_basis(const ConstraintSystem& sys, double tol = kDefaultNullspaceTolerance,
                                   bool check_sampling = true) {
  if (!(tol > 0.0 && tol <= 1e-6)) throw std::invalid_argument("nullspace tolerance must lie in (0, 1e-6]");
  const detail::NullspaceResult ns = detail::svd_nullspace(sys.rows, tol);
  const int dim = static_cast<int>(ns.vectors.cols());

  if (check_sampling) {
    std::vector<double> probe = sys.angles;
    probe.push_back(kProbeAngle);
    const int probed = static_cast<int>(detail::svd_nullspace(build_constraint_system(probe).rows, tol).vectors.cols());
    if (probed < dim) {
      throw DegenerateSampling("angle sampling is degenerate: nullspace dimension " + std::to_string(dim) +
                               " drops to " + std::to_string(probed) + " with a generic angle added");
    }
  }

  FamilyBasis basis;
  basis.elements.reserve(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) basis.elements.push_back(detail::unflatten(ns.vectors.col(k)));
  return basis;
}

/// Distance from C to span(basis) relative to ||C||_F. Zero iff C is in the family.
inline double membership_residual(const Matrix6& c, const FamilyBasis& basis) {
  if (basis.elements.empty()) throw std::invalid_argument("basis is empty");
  const double norm = c.norm();
  if (norm == 0.0) return 0.0;
  Matrix6 projected = Matrix6::Zero();
  for (const Matrix6& b : basis.elements) projected += (b.cwiseProduct(c).sum()) * b;
  return (c - projected).norm() / norm;
}

// ---------------------------------------------------------------------------
// Human-readable structure of a family
// ---------------------------------------------------------------------------

/// C(a) = sign * C(b), both 0-based (row, col).
struct EntryRelation {
  int row = 0;
  int col = 0;
  int ref_row = 0;
  int ref_col = 0;
  int sign = 1;
};

/// sum_k coefficient_k * C(entries_k) = 0
struct LinearRelation {
  std::vector<std::pair<int, int>> entries;
  std::vector<double> coefficients;
};

struct FamilyStructure {
  int dimension = 0;
  std::vector<std::pair<int, int>> zero_entries;
  std::vector<EntryRelation> equalities;
  std::vector<std::pair<int, int>> free_entries;  // one representative per class
  std::vector<LinearRelation> linear_relations;
};

/// Classifies every entry of the family: identically zero, equal (or opposite)
/// to an earlier entry, or a class representative; then finds the linear
/// relations left among the representatives.
inline FamilyStructure describe_family(const FamilyBasis& basis, double tol = 1e-8) {
  const int dim = basis.dimension();
  Eigen::MatrixXd coords(36, dim);
  for (int k = 0; k < dim; ++k)
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) coords(entry_index(r, c), k) = basis.elements[static_cast<std::size_t>(k)](r, c);

  FamilyStructure out;
  out.dimension = dim;
  std::vector<int> reps;
  for (int e = 0; e < 36; ++e) {
    const Eigen::RowVectorXd row = coords.row(e);
    if (row.norm() <= tol) {
      out.zero_entries.emplace_back(e / 6, e % 6);
      continue;
    }
    bool matched = false;
    for (int r : reps) {
      for (int sign : {1, -1}) {
        if ((row - sign * coords.row(r)).norm() <= tol) {
          out.equalities.push_back({e / 6, e % 6, r / 6, r % 6, sign});
          matched = true;
          break;
        }
      }
      if (matched) break;
    }
    if (!matched) {
      reps.push_back(e);
      out.free_entries.emplace_back(e / 6, e % 6);
    }
  }

  // Relations y with y^T coords(reps) = 0, brought to reduced row echelon form.
  const auto nrep = static_cast<Eigen::Index>(reps.size());
  if (nrep == 0) return out;
  Eigen::MatrixXd rep_coords(nrep, dim);
  for (Eigen::Index i = 0; i < nrep; ++i) rep_coords.row(i) = coords.row(reps[static_cast<std::size_t>(i)]);
  const detail::NullspaceResult left = detail::svd_nullspace(rep_coords.transpose(), 1e-10);
  Eigen::MatrixXd rel = left.vectors.transpose();  // relations as rows
  Eigen::Index lead = 0;
  for (Eigen::Index i = 0; i < rel.rows() && lead < rel.cols(); ++lead) {
    Eigen::Index pivot;
    const double best = rel.col(lead).tail(rel.rows() - i).cwiseAbs().maxCoeff(&pivot);
    if (best <= tol) continue;
    pivot += i;
    rel.row(i).swap(rel.row(pivot));
    rel.row(i) /= rel(i, lead);
    for (Eigen::Index j = 0; j < rel.rows(); ++j)
      if (j != i) rel.row(j) -= rel(j, lead) * rel.row(i);
    ++i;
  }
  for (Eigen::Index i = 0; i < rel.rows(); ++i) {
    LinearRelation lr;
    for (Eigen::Index j = 0; j < nrep; ++j) {
      if (std::abs(rel(i, j)) > tol) {
        const int e = reps[static_cast<std::size_t>(j)];
        lr.entries.emplace_back(e / 6, e % 6);
        lr.coefficients.push_back(rel(i, j));
      }
    }
    if (!lr.entries.empty()) out.linear_relations.push_back(std::move(lr));
  }
  return out;
}

}  // namespace asymel
