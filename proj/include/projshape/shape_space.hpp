#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "projshape/projective.hpp"

namespace projshape {

/// An ordered k-point configuration in R^m.
struct Configuration {
  std::vector<Eigen::VectorXd> points;

  int k() const { return static_cast<int>(points.size()); }
  int m() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
};

/// The registered shape of a k-ad: q = k - m - 2 axial points, plus the
/// frame indices that produced them.
struct ProjectiveShape {
  std::vector<AxialPoint> axes;
  int m = 0;
  int k = 0;
  std::vector<int> frame_indices;

  int q() const { return static_cast<int>(axes.size()); }
};

/// Registers a configuration into axial coordinates. The frame defaults to
/// the first m+2 landmarks; with custom indices the remaining landmarks keep
/// their original relative order.
ProjectiveShape register_configuration(const Configuration& config,
                                       std::optional<std::vector<int>> frame_indices = {});

/// Builds a shape directly from registered axial coordinates (one vector in
/// R^{m+1} per component), for data published in registered form.
ProjectiveShape shape_from_axes(const std::vector<Eigen::VectorXd>& axes, int k);

/// For m = 1: the q doubled angles theta_s in [0, 2 pi), one per component.
std::vector<double> torus_representation(const ProjectiveShape& shape);

/// A sign-aligned sample of n shapes in directional form: data[r][s] is the
/// unit representative of shape r, component s, all lying in a common open
/// half-space per component.
struct DirectionalSample {
  std::vector<std::vector<Eigen::VectorXd>> data;  // n x q
  int m = 0;
  int q = 0;

  int n() const { return static_cast<int>(data.size()); }
};

/// Chooses per-component reference directions (top eigenvector of the
/// component moment matrix) and flips every representative onto the positive
/// side. Throws NotConcentrated when some |dot| <= 0.1, where a directional
/// representation stops being meaningful.
DirectionalSample assemble_sample(const std::vector<ProjectiveShape>& shapes);

/// Re-align an already directional sample to explicit reference directions.
DirectionalSample align_to_references(const DirectionalSample& sample,
                                      const std::vector<Eigen::VectorXd>& references);

}  // namespace projshape
