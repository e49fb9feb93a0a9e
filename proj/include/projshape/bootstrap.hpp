#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "projshape/report.hpp"
#include "projshape/rng.hpp"

namespace projshape {

/// Shared resampling driver. For each of b resamples, draws n indices with
/// replacement from substream (seed, r) and evaluates the pivot; a pivot may
/// decline a degenerate resample by returning nullopt, in which case fresh
/// indices are drawn from the same substream. Results are assembled in
/// resample order, so the output is independent of any parallel schedule.
///
/// Throws BootstrapUnstable once more than half of all draws were rejected.
BootstrapDistribution bootstrap_distribution(
    int n, int b, std::uint64_t seed,
    const std::function<std::optional<double>(const std::vector<int>&)>& pivot);

}  // namespace projshape
