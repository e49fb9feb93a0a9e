#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "projshape/shape_space.hpp"

namespace projshape {

/// One recorded view: an ordered list of landmark vectors. For raw data the
/// vectors live in R^m; for pre-registered data each vector is a unit
/// representative in R^{m+1}, one per shape component.
struct LandmarkView {
  std::string id;
  std::vector<Eigen::VectorXd> landmarks;
};

struct LandmarkGroup {
  std::string name;
  std::vector<LandmarkView> views;
};

/// A named landmark dataset: groups of views sharing m and k.
/// pre_registered marks data published directly in spherical (axial)
/// coordinates; for such data rows are shape components and k = rows + m + 2.
struct LandmarkDataset {
  std::string name;
  int m = 0;
  int k = 0;
  bool pre_registered = false;
  std::string provenance;
  std::vector<LandmarkGroup> groups;

  const LandmarkGroup& group(const std::string& name) const;
};

enum class DatasetFormat { csv, json };

/// CSV schema: metadata comments (# key: value), then a header
/// `group,view,landmark,x1[,x2[,x3]]` and one row per landmark, grouped by
/// (group, view) and ordered by 1-based landmark index. JSON mirrors the same
/// tree. Both parsers validate k-consistency strictly.
LandmarkDataset parse_dataset_text(const std::string& text, DatasetFormat format);
LandmarkDataset parse_dataset(const std::string& path, DatasetFormat format);

std::string serialize_dataset(const LandmarkDataset& dataset, DatasetFormat format);
void write_dataset(const LandmarkDataset& dataset, const std::string& path,
                   DatasetFormat format);

bool dataset_equal(const LandmarkDataset& a, const LandmarkDataset& b);

/// Registers every view of a group into shapes (raw data runs the projective
/// registration; pre-registered data is wrapped directly).
std::vector<ProjectiveShape> shapes_from_group(
    const LandmarkDataset& dataset, const LandmarkGroup& group,
    std::optional<std::vector<int>> frame_indices = {});

}  // namespace projshape
