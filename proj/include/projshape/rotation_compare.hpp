#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "projshape/report.hpp"
#include "projshape/shape_space.hpp"

namespace projshape {

/// Element of SO(3).
struct Rotation3 {
  Eigen::Matrix3d r;
};

/// A rotation of RP^2 encoded as a point of RP^3: [cos(theta) : sin(theta) n]
/// for rotation angle theta in [0, pi) about the unit axis n.
struct RotationAxis4 {
  Eigen::Vector4d h;              // unit, mod sign
  bool near_pi_recovery = false;  // axis recovered from R + I near theta = pi
};

/// Affine coordinates g_a = h_a / h_0.
struct AffineRotCoords {
  Eigen::Vector3d g;
};

/// The unique rotation mapping unit vector a to unit vector b within
/// span(a, b) and fixing its orthocomplement. When a . b < 0 the sign of b is
/// flipped first (axial representatives).
Rotation3 aligning_rotation(const Eigen::Vector3d& a, const Eigen::Vector3d& b);

/// Angle/axis image of a rotation in RP^3. Identity maps to [1:0:0:0].
RotationAxis4 rotation_axis(const Rotation3& rotation);

/// h -> (h1/h0, h2/h0, h3/h0). Requires |h0| above tolerance.
AffineRotCoords affine_rot_coords(const RotationAxis4& h);

/// Result of the bootstrap comparison of two extrinsic mean axes on RP^2.
struct AxisComparison {
  Rotation3 rotation;                  // aligns mean 1 onto mean 2
  RotationAxis4 h;
  AffineRotCoords g;
  double scale = 1.0;                  // factor applied to the resampled cloud
  std::array<std::array<double, 2>, 3> intervals{};  // per-coordinate [lo, hi]
  std::vector<Eigen::Vector3d> cloud;  // scale * G(r*) per resample
  bool accept = false;                 // 0 in every interval
  TestReport report;
};

/// Nonpivotal bootstrap test of equal extrinsic means for m = 2, q = 1.
/// Both groups are resampled independently; per-coordinate simultaneous
/// percentile intervals are formed by equal-tail trimming at level
/// (1 - (1-alpha)^(1/3)) / 2 on each coordinate of the scaled cloud.
/// scale <= 0 selects the default sqrt(n1 + n2).
AxisComparison two_sample_axis_test(const std::vector<ProjectiveShape>& sample1,
                                    const std::vector<ProjectiveShape>& sample2, int b,
                                    std::uint64_t seed, double alpha, double scale = 0.0);

}  // namespace projshape
