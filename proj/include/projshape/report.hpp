#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace projshape {

/// Outcome of a hypothesis test: the statistic, its reference distribution,
/// the p-value (or region verdict) and any bootstrap metadata.
struct TestReport {
  std::string name;
  std::string statistic_name;  // "F", "T2", "F1", ...
  double statistic = 0.0;
  std::string reference;  // e.g. "F(2,6)", "chi2(4)"
  double df1 = 0.0;
  double df2 = 0.0;                          // 0 when not applicable
  std::optional<double> p_value;
  std::optional<double> p_value_asymptotic;  // chi-squared p when both are reported
  std::optional<std::uint64_t> seed;
  std::optional<int> bootstrap_b;
  int bootstrap_rejected = 0;
  std::vector<std::string> notes;

  std::string summary() const;
};

/// Sorted bootstrap distribution of a pivot statistic.
struct BootstrapDistribution {
  std::vector<double> sorted;  // ascending
  int rejected = 0;            // degenerate resamples that were redrawn
  std::uint64_t seed = 0;
  int b = 0;

  /// Empirical (level)-quantile, linear interpolation between order statistics.
  double quantile(double level) const;

  /// P*(T* >= observed), the bootstrap tail probability.
  double tail_probability(double observed) const;
};

}  // namespace projshape
