#include "projshape/bootstrap.hpp"

#include <algorithm>

#include "projshape/errors.hpp"

namespace projshape {

BootstrapDistribution bootstrap_distribution(
    int n, int b, std::uint64_t seed,
    const std::function<std::optional<double>(const std::vector<int>&)>& pivot) {
  if (n < 2) throw InsufficientData("bootstrap: need n >= 2 observations");
  if (b < 1) throw ArgumentError("bootstrap: need B >= 1 resamples");

  BootstrapDistribution out;
  out.seed = seed;
  out.b = b;
  out.sorted.reserve(b);

  const int max_rejected = b / 2;
  int rejected = 0;
  std::vector<int> indices(n);
  for (int r = 0; r < b; ++r) {
    RngStream stream(seed, static_cast<std::uint64_t>(r));
    for (;;) {
      for (int i = 0; i < n; ++i) indices[i] = static_cast<int>(stream.uniform_below(n));
      const std::optional<double> value = pivot(indices);
      if (value) {
        out.sorted.push_back(*value);
        break;
      }
      if (++rejected > max_rejected)
        throw BootstrapUnstable(
            "bootstrap: more than half of the resamples were degenerate");
    }
  }
  out.rejected = rejected;
  std::sort(out.sorted.begin(), out.sorted.end());
  return out;
}

}  // namespace projshape
