#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "projshape/projective.hpp"

namespace projshape {

/// von Mises distribution on the circle.
struct VonMisesParams {
  double mu = 0.0;     // mean direction, radians
  double kappa = 0.0;  // concentration >= 0
};

double von_mises_logpdf(double theta, const VonMisesParams& params);

/// Best-Fisher wrapped-Cauchy rejection sampler. Deterministic for a fixed
/// stream; kappa = 0 degenerates to the uniform distribution.
std::vector<double> von_mises_sample(const VonMisesParams& params, int n, std::uint64_t seed,
                                     std::uint64_t stream = 0);

/// Coefficients of the multivariate von Mises family on the q-torus:
/// exponent sum a_s cos t_s + sum b_s sin t_s + sum a_st cos t_s cos t_t
///        + sum b_st cos t_s sin t_t + sum c_st sin t_s sin t_t,
/// with zero diagonals; B need not be symmetric.
struct MultivariateVonMisesParams {
  Eigen::VectorXd a;
  Eigen::VectorXd b;
  Eigen::MatrixXd cos_cos;  // a_st
  Eigen::MatrixXd cos_sin;  // b_st
  Eigen::MatrixXd sin_sin;  // c_st

  static MultivariateVonMisesParams zero(int q);
  int q() const { return static_cast<int>(a.size()); }
  void validate() const;
};

/// The exponent only; the family's normalizing constant is intractable for
/// q > 2 and is deliberately not computed.
double multivariate_vm_logdensity_unnormalized(const std::vector<double>& thetas,
                                               const MultivariateVonMisesParams& params);

/// Axial density proportional to exp(k (mu . x)^2).
struct DimrothWatsonParams {
  Eigen::VectorXd mu;  // unit axis
  double k = 0.0;
};

double dimroth_watson_logdensity_unnormalized(const AxialPoint& z,
                                              const DimrothWatsonParams& params);

/// Monte Carlo check of the chi-squared / F reference distributions for the
/// one-sample statistics under concentrated noise at a known true mean.
struct CalibrationRow {
  std::string scenario;
  std::string statistic;
  std::string reference;
  int replications = 0;
  int degenerate = 0;      // replications that raised a degeneracy error
  double exceed95 = 0.0;   // empirical exceedance of the nominal 95% point
  double exceed99 = 0.0;
  double se95 = 0.0;       // binomial standard errors
  double se99 = 0.0;
};

struct CalibrationReport {
  std::vector<CalibrationRow> rows;

  std::string to_text() const;
  std::string to_csv() const;
};

/// scenario: "extrinsic-m1", "tangent-m2q2", or "directional-m2q1".
CalibrationReport calibration_harness(const std::string& scenario, int n, int reps,
                                      std::uint64_t seed, double kappa = 0.0);

}  // namespace projshape
