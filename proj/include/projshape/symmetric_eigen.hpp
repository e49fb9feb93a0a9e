#pragma once

#include <Eigen/Core>

namespace projshape {

/// Eigendecomposition of a real symmetric matrix, eigenvalues ascending,
/// eigenvectors as orthonormal columns matched to values by index.
struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Cyclic Jacobi rotations, swept until the off-diagonal Frobenius norm drops
/// below 1e-13 * max(1, ||A||_F). Deterministic sweep order; eigenvector signs
/// are canonicalized (largest-magnitude entry positive) so results are
/// bit-stable across platforms.
SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& a);

/// Moore-Penrose pseudo-inverse of a symmetric PSD matrix. Eigenvalues below
/// rel_cutoff * max-eigenvalue are treated as zero; the retained count is
/// written to rank_out when non-null.
Eigen::MatrixXd symmetric_pseudo_inverse(const Eigen::MatrixXd& s, double rel_cutoff,
                                         int* rank_out = nullptr);

}  // namespace projshape
