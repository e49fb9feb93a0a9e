#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace projshape {

/// Output of one bundled case study: a deterministic text report plus named
/// artifact files (CSV / SVG) keyed by filename.
struct ReproduceResult {
  std::string report;
  std::map<std::string, std::string> artifacts;
};

/// Runs one of the bundled case studies: "ex5.1", "ex5.2" or "ex5.3".
/// b == 0 selects the case default (5000 / 250 / 1500 resamples).
ReproduceResult reproduce_case(const std::string& id, int b, std::uint64_t seed);

}  // namespace projshape
