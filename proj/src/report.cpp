#include "projshape/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "projshape/errors.hpp"

namespace projshape {

namespace {

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string TestReport::summary() const {
  std::string out = name + ": " + statistic_name + " = " + format_double(statistic, 4);
  out += " on " + reference;
  if (p_value) out += ", p = " + format_double(*p_value, 4);
  if (p_value_asymptotic)
    out += " (asymptotic p = " + format_double(*p_value_asymptotic, 4) + ")";
  if (bootstrap_b) {
    out += ", B = " + std::to_string(*bootstrap_b);
    if (seed) out += ", seed = " + std::to_string(*seed);
    if (bootstrap_rejected > 0)
      out += ", redrawn = " + std::to_string(bootstrap_rejected);
  }
  for (const auto& note : notes) out += "\n  note: " + note;
  return out;
}

double BootstrapDistribution::quantile(double level) const {
  if (sorted.empty()) throw ArgumentError("BootstrapDistribution: empty distribution");
  if (level <= 0.0) return sorted.front();
  if (level >= 1.0) return sorted.back();
  const double pos = level * (static_cast<double>(sorted.size()) - 1.0);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double w = pos - static_cast<double>(lo);
  return (1.0 - w) * sorted[lo] + w * sorted[hi];
}

double BootstrapDistribution::tail_probability(double observed) const {
  if (sorted.empty()) throw ArgumentError("BootstrapDistribution: empty distribution");
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), observed);
  return static_cast<double>(sorted.end() - it) / static_cast<double>(sorted.size());
}

}  // namespace projshape
