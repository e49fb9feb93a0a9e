#include "projshape/rotation_compare.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include <Eigen/Geometry>

#include "projshape/errors.hpp"
#include "projshape/extrinsic.hpp"
#include "projshape/rng.hpp"
#include "projshape/tolerances.hpp"

namespace projshape {

namespace {

Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& n) {
  Eigen::Matrix3d s;
  s << 0, -n.z(), n.y(), n.z(), 0, -n.x(), -n.y(), n.x(), 0;
  return s;
}

}  // namespace

Rotation3 aligning_rotation(const Eigen::Vector3d& a_in, const Eigen::Vector3d& b_in) {
  Eigen::Vector3d a = a_in.normalized();
  Eigen::Vector3d b = b_in.normalized();
  if (a.dot(b) < 0.0) b = -b;  // axial representatives: keep the angle <= pi/2

  const Eigen::Vector3d axis_raw = a.cross(b);
  const double sin_theta = axis_raw.norm();
  const double cos_theta = a.dot(b);
  Rotation3 out;
  if (sin_theta <= tol::rotation_angle) {
    out.r = Eigen::Matrix3d::Identity();
    return out;
  }
  const Eigen::Vector3d n = axis_raw / sin_theta;
  const Eigen::Matrix3d s = cross_matrix(n);
  out.r = Eigen::Matrix3d::Identity() + sin_theta * s + (1.0 - cos_theta) * s * s;
  return out;
}

RotationAxis4 rotation_axis(const Rotation3& rotation) {
  const Eigen::Matrix3d& r = rotation.r;
  const double cos_theta = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
  const double theta = std::acos(cos_theta);

  RotationAxis4 out;
  if (theta <= tol::rotation_angle) {
    out.h = Eigen::Vector4d(1, 0, 0, 0);
    return out;
  }
  if (M_PI - theta <= tol::rotation_angle) {
    // Antisymmetric part vanishes at theta = pi; R + I = 2 n n^T there, so any
    // nonzero column recovers the axis.
    const Eigen::Matrix3d sym = r + Eigen::Matrix3d::Identity();
    int best = 0;
    for (int j = 1; j < 3; ++j)
      if (sym.col(j).norm() > sym.col(best).norm()) best = j;
    const Eigen::Vector3d n = sym.col(best).normalized();
    out.h << cos_theta, std::sin(theta) * n;
    out.h.normalize();
    out.near_pi_recovery = true;
    return out;
  }

  const double sin_theta = std::sin(theta);
  Eigen::Vector3d n(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  n /= 2.0 * sin_theta;
  out.h << cos_theta, sin_theta * n;
  out.h.normalize();
  return out;
}

AffineRotCoords affine_rot_coords(const RotationAxis4& h) {
  if (std::abs(h.h[0]) <= tol::det)
    throw PointAtInfinity("affine_rot_coords: h0 ~ 0, rotation angle at pi/2");
  AffineRotCoords out;
  out.g = h.h.tail<3>() / h.h[0];
  return out;
}

AxisComparison two_sample_axis_test(const std::vector<ProjectiveShape>& sample1,
                                    const std::vector<ProjectiveShape>& sample2, int b,
                                    std::uint64_t seed, double alpha, double scale) {
  if (sample1.empty() || sample2.empty())
    throw ArgumentError("two_sample_axis_test: empty sample");
  if (sample1.front().m != 2 || sample1.front().q() != 1 || sample2.front().m != 2 ||
      sample2.front().q() != 1)
    throw ArgumentError("two_sample_axis_test: requires m = 2 and a single component");
  const int n1 = static_cast<int>(sample1.size());
  const int n2 = static_cast<int>(sample2.size());
  if (n1 < 2 || n2 < 2) throw InsufficientData("two_sample_axis_test: need n1, n2 >= 2");
  if (b < 1) throw ArgumentError("two_sample_axis_test: need B >= 1");
  if (alpha <= 0.0 || alpha >= 1.0)
    throw ArgumentError("two_sample_axis_test: require 0 < alpha < 1");

  const ExtrinsicMean mean1 = extrinsic_mean(sample1);
  const ExtrinsicMean mean2 = extrinsic_mean(sample2);

  AxisComparison out;
  out.rotation = aligning_rotation(mean1.axes[0].unit(), mean2.axes[0].unit());
  out.h = rotation_axis(out.rotation);
  out.g = affine_rot_coords(out.h);
  out.scale = scale > 0.0 ? scale : std::sqrt(static_cast<double>(n1 + n2));

  const auto mean_axis_of = [](const std::vector<ProjectiveShape>& sample,
                               const std::vector<int>& indices)
      -> std::optional<Eigen::Vector3d> {
    std::vector<ProjectiveShape> resampled;
    resampled.reserve(indices.size());
    for (int i : indices) resampled.push_back(sample[i]);
    try {
      return Eigen::Vector3d(extrinsic_mean(resampled).axes[0].unit());
    } catch (const MeanNotUnique&) {
      return std::nullopt;
    }
  };

  // Joint resamples: both groups independently, substream (seed, r), group 2
  // drawing after group 1 from the same stream.
  out.cloud.reserve(b);
  int rejected = 0;
  const int max_rejected = b / 2;
  for (int r = 0; r < b; ++r) {
    RngStream stream(seed, static_cast<std::uint64_t>(r));
    for (;;) {
      std::vector<int> idx1(n1), idx2(n2);
      for (int i = 0; i < n1; ++i) idx1[i] = static_cast<int>(stream.uniform_below(n1));
      for (int i = 0; i < n2; ++i) idx2[i] = static_cast<int>(stream.uniform_below(n2));
      const std::optional<Eigen::Vector3d> a = mean_axis_of(sample1, idx1);
      const std::optional<Eigen::Vector3d> bb = mean_axis_of(sample2, idx2);
      if (a && bb) {
        const RotationAxis4 h_star = rotation_axis(aligning_rotation(*a, *bb));
        try {
          out.cloud.push_back(out.scale * affine_rot_coords(h_star).g);
          break;
        } catch (const PointAtInfinity&) {
          // fall through to redraw
        }
      }
      if (++rejected > max_rejected)
        throw BootstrapUnstable("two_sample_axis_test: too many degenerate resamples");
    }
  }

  // Simultaneous equal-tail trimming: each coordinate trimmed at
  // (1 - (1-alpha)^(1/3)) / 2 per side.
  const double tail = (1.0 - std::pow(1.0 - alpha, 1.0 / 3.0)) / 2.0;
  bool accept = true;
  for (int c = 0; c < 3; ++c) {
    std::vector<double> coord(out.cloud.size());
    for (std::size_t i = 0; i < out.cloud.size(); ++i) coord[i] = out.cloud[i][c];
    std::sort(coord.begin(), coord.end());
    BootstrapDistribution dist;
    dist.sorted = std::move(coord);
    out.intervals[c][0] = dist.quantile(tail);
    out.intervals[c][1] = dist.quantile(1.0 - tail);
    if (out.intervals[c][0] > 0.0 || out.intervals[c][1] < 0.0) accept = false;
  }
  out.accept = accept;

  out.report.name = "two-sample extrinsic axis test (rotation coordinates)";
  out.report.statistic_name = "max|g|";
  out.report.statistic = out.g.g.cwiseAbs().maxCoeff();
  out.report.reference = "nonpivotal bootstrap, simultaneous percentile intervals";
  out.report.seed = seed;
  out.report.bootstrap_b = b;
  out.report.bootstrap_rejected = rejected;
  char note[160];
  std::snprintf(note, sizeof(note),
                "equal-tail trim %.6f per coordinate, cloud scale %.4f; %s H0 at alpha = %.3f",
                tail, out.scale, accept ? "fail to reject" : "reject", alpha);
  out.report.notes.push_back(note);
  return out;
}

}  // namespace projshape
