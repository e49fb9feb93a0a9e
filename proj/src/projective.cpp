#include "projshape/projective.hpp"

#include <cmath>
#include <sstream>

#include "projshape/errors.hpp"

namespace projshape {

HomogeneousPoint::HomogeneousPoint(Eigen::VectorXd coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw ArgumentError("HomogeneousPoint: need at least 2 coordinates");
  if (coords_.norm() <= tol::nonzero)
    throw ArgumentError("HomogeneousPoint: zero vector is not a projective point");
}

HomogeneousPoint HomogeneousPoint::from_affine(const Eigen::VectorXd& x) {
  Eigen::VectorXd h(x.size() + 1);
  h.head(x.size()) = x;
  h[x.size()] = 1.0;
  return HomogeneousPoint(std::move(h));
}

bool HomogeneousPoint::same_point(const HomogeneousPoint& other, double tolerance) const {
  if (coords_.size() != other.coords_.size()) return false;
  const Eigen::VectorXd a = coords_.normalized();
  const Eigen::VectorXd b = other.coords_.normalized();
  return std::min((a - b).norm(), (a + b).norm()) <= tolerance;
}

AxialPoint::AxialPoint(Eigen::VectorXd representative) : unit_(std::move(representative)) {
  const double n = unit_.norm();
  if (n <= tol::nonzero) throw ArgumentError("AxialPoint: zero vector");
  unit_ /= n;
}

bool AxialPoint::equals_mod_sign(const AxialPoint& other, double tolerance) const {
  if (unit_.size() != other.unit_.size()) return false;
  return std::min((unit_ - other.unit_).norm(), (unit_ + other.unit_).norm()) <= tolerance;
}

Eigen::VectorXd AxialPoint::canonical() const {
  for (int i = static_cast<int>(unit_.size()) - 1; i >= 0; --i) {
    if (std::abs(unit_[i]) > tol::unit) return unit_[i] > 0.0 ? unit_ : -unit_;
  }
  return unit_;
}

GeneralPositionReport general_position_check(const std::vector<HomogeneousPoint>& points) {
  GeneralPositionReport report;
  if (points.empty()) throw ArgumentError("general_position_check: empty point list");
  const int m = points.front().dim();
  if (static_cast<int>(points.size()) != m + 2) {
    std::ostringstream msg;
    msg << "general_position_check: expected " << m + 2 << " points, got " << points.size();
    throw ArgumentError(msg.str());
  }
  Eigen::MatrixXd cols(m + 1, m + 2);
  for (int j = 0; j < m + 2; ++j) {
    if (points[j].dim() != m) throw ArgumentError("general_position_check: mixed dimensions");
    cols.col(j) = points[j].coords().normalized();
  }
  // one maximal minor per omitted column
  for (int omit = 0; omit < m + 2; ++omit) {
    Eigen::MatrixXd sub(m + 1, m + 1);
    int c = 0;
    for (int j = 0; j < m + 2; ++j)
      if (j != omit) sub.col(c++) = cols.col(j);
    if (std::abs(sub.determinant()) <= tol::det) {
      std::ostringstream msg;
      msg << "points {";
      bool first = true;
      for (int j = 0; j < m + 2; ++j) {
        if (j == omit) continue;
        msg << (first ? "" : ",") << j + 1;
        first = false;
      }
      msg << "} are linearly dependent";
      report.ok = false;
      report.diagnostic = msg.str();
      return report;
    }
  }
  report.ok = true;
  return report;
}

ProjectiveFrame::ProjectiveFrame(std::vector<HomogeneousPoint> points, Eigen::MatrixXd u,
                                 Eigen::VectorXd beta)
    : points_(std::move(points)), u_(std::move(u)), beta_(std::move(beta)), lu_(u_) {
  m_ = static_cast<int>(u_.rows()) - 1;
}

ProjectiveFrame ProjectiveFrame::from_affine_points(const std::vector<Eigen::VectorXd>& xs) {
  std::vector<HomogeneousPoint> points;
  points.reserve(xs.size());
  for (const auto& x : xs) points.push_back(HomogeneousPoint::from_affine(x));
  return from_points(points);
}

ProjectiveFrame ProjectiveFrame::from_points(const std::vector<HomogeneousPoint>& points) {
  if (points.size() < 3) throw ArgumentError("ProjectiveFrame: need m+2 >= 3 points");
  const int m = points.front().dim();
  if (static_cast<int>(points.size()) != m + 2)
    throw ArgumentError("ProjectiveFrame: need exactly m+2 points");

  const GeneralPositionReport gp = general_position_check(points);
  if (!gp.ok) throw DegenerateFrame("frame points not in general position: " + gp.diagnostic);

  Eigen::MatrixXd u(m + 1, m + 1);
  for (int j = 0; j < m + 1; ++j) u.col(j) = points[j].coords();

  // Singularity is judged on unit-normalized columns so the test is scale-free.
  Eigen::MatrixXd u_normalized = u;
  for (int j = 0; j < m + 1; ++j) u_normalized.col(j).normalize();
  if (std::abs(u_normalized.determinant()) <= tol::det)
    throw DegenerateFrame("frame matrix U is singular");

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(u);
  const Eigen::VectorXd beta = lu.solve(points[m + 1].coords());
  const double beta_scale = beta.cwiseAbs().maxCoeff();
  for (int i = 0; i < beta.size(); ++i) {
    if (std::abs(beta[i]) <= tol::det * std::max(1.0, beta_scale))
      throw DegenerateFrame("unit point lies on a face of the frame simplex (beta_" +
                            std::to_string(i + 1) + " ~ 0)");
  }
  return ProjectiveFrame(points, std::move(u), beta);
}

Eigen::VectorXd ProjectiveFrame::solve(const Eigen::VectorXd& homogeneous) const {
  return lu_.solve(homogeneous);
}

RegisteredPoint projective_coordinate(const Eigen::VectorXd& x, const ProjectiveFrame& frame) {
  return projective_coordinate(HomogeneousPoint::from_affine(x), frame);
}

RegisteredPoint projective_coordinate(const HomogeneousPoint& p, const ProjectiveFrame& frame) {
  if (p.dim() != frame.dim())
    throw ArgumentError("projective_coordinate: point/frame dimension mismatch");
  Eigen::VectorXd v = frame.solve(p.coords());
  Eigen::VectorXd y = v.cwiseQuotient(frame.beta());
  const double norm = y.norm();
  if (norm <= tol::det)
    throw InternalError("projective_coordinate: y vanished for a nonzero point");
  return RegisteredPoint{std::move(v), y, AxialPoint(y)};
}

namespace {

CrossRatio evaluate_cross_ratio(double x1, double x2, double x3, double x) {
  const double scale = std::max({1.0, std::abs(x1), std::abs(x2), std::abs(x3), std::abs(x)});
  if (std::abs(x1 - x2) <= tol::det * scale || std::abs(x2 - x3) <= tol::det * scale ||
      std::abs(x1 - x3) <= tol::det * scale)
    throw ArgumentError("cross_ratio: frame points must be pairwise distinct");

  const double numerator = (x - x2) * (x1 - x3);
  const double denominator = (x3 - x2) * (x1 - x);
  CrossRatio out;
  if (std::abs(denominator) <= tol::det * scale * scale) {
    out.infinite = true;
    out.sign = (numerator >= 0.0) == (denominator >= 0.0) ? 1 : -1;
    return out;
  }
  out.value = numerator / denominator;
  return out;
}

}  // namespace

CrossRatio cross_ratio(double x1, double x2, double x3, double x) {
  return evaluate_cross_ratio(x1, x2, x3, x);
}

CrossRatio psi_chart_123(double x1, double x2, double x3, double x4) {
  return evaluate_cross_ratio(x1, x2, x3, x4);
}

CrossRatio psi_chart_124(double x1, double x2, double x3, double x4) {
  return evaluate_cross_ratio(x1, x2, x4, x3);
}

CrossRatio psi_chart_134(double x1, double x2, double x3, double x4) {
  return evaluate_cross_ratio(x4, x1, x3, x2);
}

CrossRatio psi_chart_234(double x1, double x2, double x3, double x4) {
  return evaluate_cross_ratio(x4, x2, x3, x1);
}

std::pair<double, double> axial_angle_and_double(const AxialPoint& z) {
  if (z.dim() != 1) throw ArgumentError("axial_angle_and_double: defined for m = 1 only");
  double phi = std::atan2(z.unit()[1], z.unit()[0]);
  if (phi < 0.0) phi += M_PI;          // axial: z and -z are the same point
  if (phi >= M_PI) phi -= M_PI;        // fold the boundary case phi == pi
  return {phi, 2.0 * phi};
}

InvariantVector invariants_from_axial(const AxialPoint& z) {
  const int m = z.dim();
  const double last = z.unit()[m];
  if (std::abs(last) <= tol::det)
    throw PointAtInfinity("invariants undefined: registered point at infinity");
  InvariantVector out;
  out.iota = z.unit().head(m) / last;
  return out;
}

}  // namespace projshape
