#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "projshape/report.hpp"
#include "projshape/shape_space.hpp"

namespace projshape {

/// Per-component sample mean directions and mean resultant lengths.
struct MeanDirections {
  std::vector<Eigen::VectorXd> mu;  // unit vectors
  std::vector<double> rbar;         // in [0, 1]
  int m = 0;
  int q = 0;
};

MeanDirections mean_directions(const DirectionalSample& sample);

/// Orthonormal basis of the tangent space at a unit vector mu, as the columns
/// of an (m+1) x m matrix. Built by Gram-Schmidt over the canonical basis,
/// skipping the basis vector most parallel to mu, so the frame is
/// deterministic and smooth away from coordinate poles.
Eigen::MatrixXd tangent_frame(const Eigen::VectorXd& mu);

/// Tangent residual (I - mu mu^T) x.
Eigen::VectorXd tangent_residual(const Eigen::VectorXd& x, const Eigen::VectorXd& mu);

/// Tangent coordinates of every observation about the given mean directions,
/// flattened to length M = m*q per observation (component-major).
std::vector<Eigen::VectorXd> tangent_coords(const DirectionalSample& sample,
                                            const MeanDirections& mu);

/// Decomposition of the offset between sample mean directions and a
/// hypothesized mean into tangential coordinates d (length M) and per
/// component normal magnitudes, in the frames at the sample mean directions.
struct TangentDecomposition {
  Eigen::VectorXd d;
  std::vector<double> nu;
  std::vector<Eigen::MatrixXd> frames;
};

TangentDecomposition decompose_offset(const MeanDirections& sample_means,
                                      const MeanDirections& mu0);

/// Pooled covariance with its Moore-Penrose generalized inverse.
struct PooledCovariance {
  Eigen::MatrixXd s;
  Eigen::MatrixXd pinv;
  int rank = 0;
};

PooledCovariance pooled_covariance(const std::vector<Eigen::VectorXd>& group1,
                                   const std::vector<Eigen::VectorXd>& group2);

/// One-sample Hotelling test of H0: mean direction = mu0 for concentrated
/// data; F = ((n-M)/M) * D^2 on F(M, n-M), chi-squared p reported alongside.
TestReport one_sample_hotelling(const DirectionalSample& sample, const MeanDirections& mu0);

/// Two-sample Hotelling test of equal mean directions, pooled tangent space
/// at the combined mean directions; F on F(M, n1+n2-M-1).
TestReport two_sample_hotelling(const DirectionalSample& sample1,
                                const DirectionalSample& sample2);

/// Classical two-sample Hotelling test on Euclidean vectors (used for the
/// projective-invariant representation), same F scaling.
TestReport euclidean_two_sample_hotelling(const std::vector<Eigen::VectorXd>& group1,
                                          const std::vector<Eigen::VectorXd>& group2);

/// Watson-Williams F test of a hypothesized mean direction on the circle.
TestReport watson_williams(const std::vector<double>& angles, double theta0);

/// Studentized directional statistic T^2 = n d^T G(y)^{-1} d against its
/// chi-squared(M) limit.
TestReport directional_t_squared(const DirectionalSample& sample, const MeanDirections& mu0);

/// Same statistic restricted to one component (0-based), M = m.
double directional_t_squared_component(const DirectionalSample& sample,
                                       const Eigen::VectorXd& mu0_component, int component);

/// Observed joint statistic without the report wrapper.
double directional_t_squared_statistic(const DirectionalSample& sample,
                                       const MeanDirections& mu0);

/// Bootstrap confidence region for the mean directions.
struct ConfidenceRegion {
  enum class Mode { joint, bonferroni };

  Mode mode = Mode::joint;
  double alpha = 0.05;
  double joint_threshold = 0.0;                // mode == joint
  std::vector<double> component_thresholds;    // mode == bonferroni
  std::vector<BootstrapDistribution> pivots;   // one (joint) or q (bonferroni)
  DirectionalSample sample;                    // defining sample, for membership tests

  /// Membership statistics of a candidate mean (one unit vector per component).
  std::vector<double> membership_statistics(const std::vector<Eigen::VectorXd>& mu) const;
  bool contains(const std::vector<Eigen::VectorXd>& mu) const;
};

ConfidenceRegion bootstrap_confidence_region(const DirectionalSample& sample, int b,
                                             std::uint64_t seed, double alpha,
                                             ConfidenceRegion::Mode mode);

}  // namespace projshape
