#include "projshape/shape_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "projshape/errors.hpp"
#include "projshape/symmetric_eigen.hpp"

namespace projshape {

ProjectiveShape register_configuration(const Configuration& config,
                                       std::optional<std::vector<int>> frame_indices) {
  const int k = config.k();
  const int m = config.m();
  if (k < m + 3) throw ArgumentError("register: need k >= m+3 landmarks");
  for (const auto& p : config.points)
    if (static_cast<int>(p.size()) != m) throw ArgumentError("register: mixed dimensions");

  std::vector<int> frame(m + 2);
  if (frame_indices) {
    frame = *frame_indices;
    if (static_cast<int>(frame.size()) != m + 2)
      throw ArgumentError("register: frame must list exactly m+2 indices");
    std::set<int> seen;
    for (int i : frame) {
      if (i < 0 || i >= k) throw ArgumentError("register: frame index out of range");
      if (!seen.insert(i).second) throw ArgumentError("register: repeated frame index");
    }
  } else {
    for (int i = 0; i < m + 2; ++i) frame[i] = i;
  }

  std::vector<Eigen::VectorXd> frame_points;
  frame_points.reserve(m + 2);
  for (int i : frame) frame_points.push_back(config.points[i]);
  const ProjectiveFrame projective_frame = ProjectiveFrame::from_affine_points(frame_points);

  ProjectiveShape shape;
  shape.m = m;
  shape.k = k;
  shape.frame_indices = frame;
  const std::set<int> frame_set(frame.begin(), frame.end());
  for (int i = 0; i < k; ++i) {
    if (frame_set.count(i)) continue;
    shape.axes.push_back(projective_coordinate(config.points[i], projective_frame).z);
  }
  return shape;
}

ProjectiveShape shape_from_axes(const std::vector<Eigen::VectorXd>& axes, int k) {
  if (axes.empty()) throw ArgumentError("shape_from_axes: empty axis list");
  ProjectiveShape shape;
  shape.m = static_cast<int>(axes.front().size()) - 1;
  shape.k = k;
  for (int i = 0; i < shape.m + 2; ++i) shape.frame_indices.push_back(i);
  for (const auto& a : axes) {
    if (a.size() != axes.front().size()) throw ArgumentError("shape_from_axes: mixed dimensions");
    shape.axes.emplace_back(a);
  }
  if (shape.q() != k - shape.m - 2)
    throw ArgumentError("shape_from_axes: axis count does not match k - m - 2");
  return shape;
}

std::vector<double> torus_representation(const ProjectiveShape& shape) {
  if (shape.m != 1) throw ArgumentError("torus_representation: defined for m = 1 only");
  std::vector<double> thetas;
  thetas.reserve(shape.axes.size());
  for (const auto& axis : shape.axes) thetas.push_back(axial_angle_and_double(axis).second);
  return thetas;
}

DirectionalSample assemble_sample(const std::vector<ProjectiveShape>& shapes) {
  if (shapes.empty()) throw ArgumentError("assemble_sample: need n >= 1 shapes");
  const int m = shapes.front().m;
  const int q = shapes.front().q();
  for (const auto& s : shapes) {
    if (s.m != m || s.q() != q || s.k != shapes.front().k ||
        s.frame_indices != shapes.front().frame_indices)
      throw ArgumentError("assemble_sample: shapes disagree in dimensions or frame");
  }

  const int n = static_cast<int>(shapes.size());
  DirectionalSample sample;
  sample.m = m;
  sample.q = q;
  sample.data.assign(n, std::vector<Eigen::VectorXd>(q));

  for (int s = 0; s < q; ++s) {
    Eigen::MatrixXd moment = Eigen::MatrixXd::Zero(m + 1, m + 1);
    for (const auto& shape : shapes) {
      const Eigen::VectorXd& z = shape.axes[s].unit();
      moment += z * z.transpose() / n;
    }
    const SymmetricEigen eig = jacobi_eigen(moment);
    const Eigen::VectorXd reference = eig.vectors.col(m);

    for (int r = 0; r < n; ++r) {
      const Eigen::VectorXd& z = shapes[r].axes[s].unit();
      const double dot = reference.dot(z);
      if (std::abs(dot) <= tol::alignment)
        throw NotConcentrated("assemble_sample: component " + std::to_string(s + 1) +
                              " too dispersed for a directional representation");
      sample.data[r][s] = dot > 0.0 ? z : Eigen::VectorXd(-z);
    }
  }
  return sample;
}

DirectionalSample align_to_references(const DirectionalSample& sample,
                                      const std::vector<Eigen::VectorXd>& references) {
  if (static_cast<int>(references.size()) != sample.q)
    throw ArgumentError("align_to_references: one reference per component required");
  DirectionalSample out = sample;
  for (int r = 0; r < sample.n(); ++r) {
    for (int s = 0; s < sample.q; ++s) {
      const double dot = references[s].dot(sample.data[r][s]);
      if (std::abs(dot) <= tol::alignment)
        throw NotConcentrated("align_to_references: representative nearly orthogonal to reference");
      if (dot < 0.0) out.data[r][s] = -sample.data[r][s];
    }
  }
  return out;
}

}  // namespace projshape
