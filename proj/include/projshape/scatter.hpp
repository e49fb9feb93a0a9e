#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

namespace projshape {

/// CSV of a 3-D point cloud, columns g1,g2,g3.
std::string scatter_csv(const std::vector<Eigen::Vector3d>& points);

/// Static SVG 1.1 with the three orthogonal 2-D projections of the cloud.
/// axis_prefix labels the axes (e.g. "3G" yields 3G1/3G2/3G3).
std::string scatter_svg(const std::vector<Eigen::Vector3d>& points,
                        const std::string& axis_prefix);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace projshape
