#pragma once

#include <string>
#include <vector>

#include "projshape/dataset.hpp"

namespace projshape {

/// Bundled case-study datasets:
///   "ex2.1"  two camera views of a five-point cross on a planar sheet (raw)
///   "table1" collinear window landmarks, five views of one building (raw, m=1)
///   "table2" registered spherical coordinates for two buildings (m=2, k=5)
///   "table3" registered bivariate spherical coordinates, face views (m=2, k=6)
/// Aliases: ex5.1 -> table1, ex5.2 -> table2, ex5.3 -> table3.
LandmarkDataset fixture_dataset(const std::string& id);

std::vector<std::string> fixture_ids();

}  // namespace projshape
