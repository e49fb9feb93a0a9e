#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "projshape/report.hpp"
#include "projshape/shape_space.hpp"
#include "projshape/symmetric_eigen.hpp"

namespace projshape {

/// Per-component eigenanalysis of the sample moment matrices
/// J_s = (1/n) sum_r X_{r,s} X_{r,s}^T, eigenvalues ascending.
struct ComponentEigen {
  Eigen::MatrixXd moment;    // J_s
  Eigen::VectorXd values;    // d_s(1) <= ... <= d_s(m+1)
  Eigen::MatrixXd vectors;   // columns g_s(1) ... g_s(m+1)
  double relative_gap = 0.0; // (d(m+1) - d(m)) / trace(J)
};

struct EigenSummary {
  std::vector<ComponentEigen> components;
  int n = 0;
  int m = 0;
  int q = 0;
};

/// Extrinsic sample mean: one axis per component, the top eigenvector of J_s.
struct ExtrinsicMean {
  std::vector<AxialPoint> axes;
  EigenSummary eigen;
  int n = 0;
};

/// The rank-one projection embedding [z] -> z z^T (symmetric, trace 1, PSD).
Eigen::MatrixXd veronese_embed(const AxialPoint& z);

/// Eigenanalysis of all component moment matrices. Does not enforce the
/// spectral-gap condition; callers that need a unique mean must check it.
EigenSummary eigen_summary(const std::vector<ProjectiveShape>& sample);

/// Extrinsic mean of a sample of shapes. Throws MeanNotUnique when some
/// component's top eigenvalue is not simple (relative gap <= tol::gap).
ExtrinsicMean extrinsic_mean(const std::vector<ProjectiveShape>& sample);

/// Mean squared chord distance (in the embedding) from the sample to a
/// candidate tuple of axes.
double frechet_function(const std::vector<ProjectiveShape>& sample,
                        const std::vector<AxialPoint>& candidate);

/// The M x M covariance estimator of the embedded sample restricted to the
/// tangent space at the mean, in the eigenvector basis; M = m*q, indices in
/// lexicographic (component, eigenvector) order.
Eigen::MatrixXd covariance_g(const std::vector<ProjectiveShape>& sample,
                             const EigenSummary& eigen);

/// One-sample test of H0: extrinsic mean equals mu0. The T^2 statistic is
/// referred to its chi-squared(M) limit.
TestReport one_sample_extrinsic_test(const std::vector<ProjectiveShape>& sample,
                                     const std::vector<AxialPoint>& mu0);

/// Observed T^2 at mu0 without the report wrapper.
double extrinsic_t_squared(const std::vector<ProjectiveShape>& sample,
                           const std::vector<AxialPoint>& mu0);

/// Bootstrap distribution of the resampled pivot, in which the original top
/// eigenvectors play the role of the hypothesized mean and the eigenvectors
/// and covariance are recomputed per resample. Degenerate resamples (gap or
/// covariance failure) are redrawn and counted.
BootstrapDistribution bootstrap_extrinsic_test(const std::vector<ProjectiveShape>& sample,
                                               int b, std::uint64_t seed);

}  // namespace projshape
