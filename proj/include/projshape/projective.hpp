#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "projshape/tolerances.hpp"

namespace projshape {

/// A point of RP^m stored as homogeneous coordinates in R^{m+1}.
/// Representatives are equal iff proportional; the stored vector is never
/// zero (norm > tol::nonzero, checked at construction).
class HomogeneousPoint {
 public:
  explicit HomogeneousPoint(Eigen::VectorXd coords);

  /// Affine embedding x -> [x : 1].
  static HomogeneousPoint from_affine(const Eigen::VectorXd& x);

  const Eigen::VectorXd& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()) - 1; }

  /// Scale-invariant equality: true iff the representatives are proportional.
  bool same_point(const HomogeneousPoint& other, double tolerance = tol::unit) const;

 private:
  Eigen::VectorXd coords_;
};

/// A point of RP^m as a unit vector modulo sign.
class AxialPoint {
 public:
  explicit AxialPoint(Eigen::VectorXd representative);

  const Eigen::VectorXd& unit() const { return unit_; }
  int dim() const { return static_cast<int>(unit_.size()) - 1; }

  bool equals_mod_sign(const AxialPoint& other, double tolerance = tol::unit) const;

  /// Representative with the last nonzero coordinate positive (the convention
  /// used for display and serialization; comparisons stay mod-sign).
  Eigen::VectorXd canonical() const;

  /// |z1 . z2|; 1 for the same axis, 0 for perpendicular axes.
  double abs_dot(const AxialPoint& other) const { return std::abs(unit_.dot(other.unit_)); }

 private:
  Eigen::VectorXd unit_;
};

/// Result of checking that m+2 points lie in general position.
struct GeneralPositionReport {
  bool ok = false;
  std::string diagnostic;  // names the first failing (m+1)-subset when !ok
};

/// True iff every (m+1)-subset of the m+2 points spans R^{m+1}; minors are
/// computed after normalizing each column, and must exceed tol::det.
GeneralPositionReport general_position_check(const std::vector<HomogeneousPoint>& points);

/// A projective frame: m+2 labelled points in general position, with the
/// registration data cached (U = [p(x_1) ... p(x_{m+1})] and the coefficient
/// vector beta solving U beta = p(x_{m+2})).
class ProjectiveFrame {
 public:
  /// Builds the frame from m+2 affine points in R^m. Throws DegenerateFrame
  /// when U is singular or some |beta_i| falls below tolerance.
  static ProjectiveFrame from_affine_points(const std::vector<Eigen::VectorXd>& xs);

  /// Same construction from homogeneous representatives.
  static ProjectiveFrame from_points(const std::vector<HomogeneousPoint>& points);

  int dim() const { return m_; }
  const Eigen::MatrixXd& u() const { return u_; }
  const Eigen::VectorXd& beta() const { return beta_; }
  const std::vector<HomogeneousPoint>& points() const { return points_; }

  /// Solves U v = p(x) by partial-pivot LU.
  Eigen::VectorXd solve(const Eigen::VectorXd& homogeneous) const;

 private:
  ProjectiveFrame(std::vector<HomogeneousPoint> points, Eigen::MatrixXd u, Eigen::VectorXd beta);

  std::vector<HomogeneousPoint> points_;
  Eigen::MatrixXd u_;
  Eigen::VectorXd beta_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  int m_ = 0;
};

/// Registration of one point: v = U^{-1} p(x), y_j = v_j / beta_j,
/// z = y / |y|. v and y are kept for diagnostics.
struct RegisteredPoint {
  Eigen::VectorXd v;
  Eigen::VectorXd y;
  AxialPoint z;
};

/// Axial coordinate of an affine point x with respect to a frame.
RegisteredPoint projective_coordinate(const Eigen::VectorXd& x, const ProjectiveFrame& frame);

/// Axial coordinate of a point given in homogeneous coordinates.
RegisteredPoint projective_coordinate(const HomogeneousPoint& p, const ProjectiveFrame& frame);

/// Cross-ratio of four scalars; infinite values (x = x1) are tagged rather
/// than returned as raw IEEE infinities.
struct CrossRatio {
  double value = 0.0;
  bool infinite = false;
  int sign = 0;  // sign of the infinity when infinite
};

/// c(x1, x2, x3, x) = {(x - x2)(x1 - x3)} / {(x3 - x2)(x1 - x)}.
/// The frame points x1, x2, x3 must be pairwise distinct.
CrossRatio cross_ratio(double x1, double x2, double x3, double x);

/// Chart coordinates of the four-point linear shape. The orderings are fixed
/// so that the transition identities
///   psi_124 = 1 / psi_123,
///   psi_134 = 1 - psi_124,
///   psi_234 = psi_134 / (psi_134 - 1)
/// hold identically in exact arithmetic.
CrossRatio psi_chart_123(double x1, double x2, double x3, double x4);
CrossRatio psi_chart_124(double x1, double x2, double x3, double x4);
CrossRatio psi_chart_134(double x1, double x2, double x3, double x4);
CrossRatio psi_chart_234(double x1, double x2, double x3, double x4);

/// For m = 1: the axial angle phi in [0, pi) and the doubled direction
/// theta = 2 phi in [0, 2 pi).
std::pair<double, double> axial_angle_and_double(const AxialPoint& z);

/// Projective invariants iota_j = z_j / z_{m+1}. Requires the registered
/// point to be away from the hyperplane at infinity (|z_{m+1}| > tol::det).
struct InvariantVector {
  Eigen::VectorXd iota;
};

InvariantVector invariants_from_axial(const AxialPoint& z);

}  // namespace projshape
