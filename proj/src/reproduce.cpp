#include "projshape/reproduce.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "projshape/errors.hpp"
#include "projshape/extrinsic.hpp"
#include "projshape/fixtures.hpp"
#include "projshape/projective.hpp"
#include "projshape/rotation_compare.hpp"
#include "projshape/scatter.hpp"
#include "projshape/special_functions.hpp"
#include "projshape/tangent_stats.hpp"

namespace projshape {

namespace {

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

DirectionalSample circle_sample(const std::vector<double>& thetas) {
  DirectionalSample sample;
  sample.m = 1;
  sample.q = 1;
  for (double t : thetas)
    sample.data.push_back({Eigen::Vector2d(std::cos(t), std::sin(t))});
  return sample;
}

MeanDirections circle_mean(double theta) {
  MeanDirections mu;
  mu.m = 1;
  mu.q = 1;
  mu.mu.push_back(Eigen::Vector2d(std::cos(theta), std::sin(theta)));
  mu.rbar.push_back(1.0);
  return mu;
}

ReproduceResult reproduce_ex51(int b, std::uint64_t seed) {
  if (b <= 0) b = 5000;
  const LandmarkDataset data = fixture_dataset("table1");
  const std::vector<ProjectiveShape> shapes = shapes_from_group(data, data.groups[0]);

  std::ostringstream out;
  out << "case ex5.1: equidistance of four collinear landmarks (m=1, k=4, q=1, n="
      << shapes.size() << ")\n";
  out << "view   c       phi     theta\n";
  std::vector<double> thetas;
  for (std::size_t v = 0; v < shapes.size(); ++v) {
    const auto& view = data.groups[0].views[v];
    const CrossRatio c = cross_ratio(view.landmarks[0][0], view.landmarks[1][0],
                                     view.landmarks[2][0], view.landmarks[3][0]);
    const auto [phi, theta] = axial_angle_and_double(shapes[v].axes[0]);
    thetas.push_back(theta);
    out << view.id << "      " << fmt(c.value, 3) << "   " << fmt(phi, 3) << "   "
        << fmt(theta, 3) << "\n";
  }

  // Equidistant landmarks have cross-ratio 4/3; the corresponding direction.
  const double theta0 = 2.0 * std::atan2(3.0, 4.0);
  out << "theta0 = " << fmt(theta0, 6) << " (cross-ratio 4/3)\n\n";

  const TestReport ww = watson_williams(thetas, theta0);
  out << ww.summary() << "\n";

  const DirectionalSample sample = circle_sample(thetas);
  const MeanDirections mu0 = circle_mean(theta0);
  const TestReport tangent = one_sample_hotelling(sample, mu0);
  out << tangent.summary() << "\n";
  out << "  equivalent one-sample t: |t| = " << fmt(std::sqrt(tangent.statistic), 4) << "\n";

  const double observed = directional_t_squared_statistic(sample, mu0);
  const ConfidenceRegion region =
      bootstrap_confidence_region(sample, b, seed, 0.05, ConfidenceRegion::Mode::joint);
  const double p_boot = region.pivots[0].tail_probability(observed);
  out << "bootstrap directional pivot: T2 = " << fmt(observed, 4) << ", p = " << fmt(p_boot, 4)
      << ", B = " << b << ", seed = " << seed
      << ", redrawn = " << region.pivots[0].rejected << "\n";

  ReproduceResult result;
  result.report = out.str();
  return result;
}

ReproduceResult reproduce_ex52(int b, std::uint64_t seed) {
  if (b <= 0) b = 250;
  const LandmarkDataset data = fixture_dataset("table2");
  const std::vector<ProjectiveShape> education = shapes_from_group(data, data.group("education"));
  const std::vector<ProjectiveShape> careers = shapes_from_group(data, data.group("careers"));

  std::ostringstream out;
  out << "case ex5.2: two buildings, five landmarks (m=2, k=5, q=1, n=" << education.size()
      << "+" << careers.size() << ")\n";

  const DirectionalSample education_sample = assemble_sample(education);
  const DirectionalSample careers_sample = assemble_sample(careers);
  const MeanDirections education_mu = mean_directions(education_sample);
  const MeanDirections careers_mu = mean_directions(careers_sample);

  std::vector<ProjectiveShape> combined = education;
  combined.insert(combined.end(), careers.begin(), careers.end());
  const MeanDirections pooled_mu = mean_directions(assemble_sample(combined));

  out << "mean resultant lengths: education " << fmt(education_mu.rbar[0], 4) << ", careers "
      << fmt(careers_mu.rbar[0], 4) << ", combined " << fmt(pooled_mu.rbar[0], 4) << "\n";
  out << "combined mean direction: (" << fmt(pooled_mu.mu[0][0], 4) << ", "
      << fmt(pooled_mu.mu[0][1], 4) << ", " << fmt(pooled_mu.mu[0][2], 4) << ")\n\n";

  const TestReport two_sample = two_sample_hotelling(education_sample, careers_sample);
  out << two_sample.summary() << "\n\n";

  const ExtrinsicMean mean1 = extrinsic_mean(education);
  const ExtrinsicMean mean2 = extrinsic_mean(careers);
  const Eigen::VectorXd m1 = mean1.axes[0].canonical();
  const Eigen::VectorXd m2 = mean2.axes[0].canonical();
  out << "extrinsic mean, education: [" << fmt(m1[0], 4) << " : " << fmt(m1[1], 4) << " : "
      << fmt(m1[2], 4) << "]\n";
  out << "extrinsic mean, careers:   [" << fmt(m2[0], 4) << " : " << fmt(m2[1], 4) << " : "
      << fmt(m2[2], 4) << "]\n";

  const AxisComparison comparison =
      two_sample_axis_test(education, careers, b, seed, 0.07, 3.0);
  out << "aligning rotation axis H(r) = [" << fmt(comparison.h.h[0], 4) << " : "
      << fmt(comparison.h.h[1], 4) << " : " << fmt(comparison.h.h[2], 4) << " : "
      << fmt(comparison.h.h[3], 4) << "]\n";
  out << "affine coordinates G(r) = (" << fmt(comparison.g.g[0], 4) << ", "
      << fmt(comparison.g.g[1], 4) << ", " << fmt(comparison.g.g[2], 4) << ")\n";
  out << "93% simultaneous bootstrap intervals for " << fmt(comparison.scale, 0)
      << "G(r*), B = " << b << ", seed = " << seed << ":\n";
  for (int c = 0; c < 3; ++c)
    out << "  coordinate " << c + 1 << ": [" << fmt(comparison.intervals[c][0], 2) << ", "
        << fmt(comparison.intervals[c][1], 2) << "]\n";
  out << (comparison.accept ? "0 in every interval: fail to reject equal means at alpha = 0.07"
                            : "0 outside some interval: reject equal means at alpha = 0.07")
      << "\n\n";

  const auto invariants_of = [](const std::vector<ProjectiveShape>& shapes) {
    std::vector<Eigen::VectorXd> inv;
    inv.reserve(shapes.size());
    for (const auto& s : shapes) inv.push_back(invariants_from_axial(s.axes[0]).iota);
    return inv;
  };
  const std::vector<Eigen::VectorXd> inv1 = invariants_of(education);
  const std::vector<Eigen::VectorXd> inv2 = invariants_of(careers);
  out << "projective invariants, education:";
  for (const auto& v : inv1) out << " (" << fmt(v[0], 3) << ", " << fmt(v[1], 3) << ")";
  out << "\nprojective invariants, careers:  ";
  for (const auto& v : inv2) out << " (" << fmt(v[0], 3) << ", " << fmt(v[1], 3) << ")";
  out << "\n";
  const TestReport invariant_test = euclidean_two_sample_hotelling(inv1, inv2);
  out << invariant_test.summary() << "\n";

  ReproduceResult result;
  result.report = out.str();
  result.artifacts["ex5.2_cloud.csv"] = scatter_csv(comparison.cloud);
  result.artifacts["ex5.2_cloud.svg"] = scatter_svg(comparison.cloud, "3G");
  return result;
}

ReproduceResult reproduce_ex53(int b, std::uint64_t seed) {
  if (b <= 0) b = 1500;
  const LandmarkDataset data = fixture_dataset("table3");
  const std::vector<ProjectiveShape> frontal = shapes_from_group(data, data.group("frontal"));
  const std::vector<ProjectiveShape> side = shapes_from_group(data, data.group("side"));

  std::ostringstream out;
  out << "case ex5.3: face views, six landmarks (m=2, k=6, q=2, n=" << frontal.size() << "+"
      << side.size() << ")\n";

  const DirectionalSample frontal_sample = assemble_sample(frontal);
  const DirectionalSample side_sample = assemble_sample(side);
  const MeanDirections frontal_mu = mean_directions(frontal_sample);
  const MeanDirections side_mu = mean_directions(side_sample);

  std::vector<ProjectiveShape> combined = frontal;
  combined.insert(combined.end(), side.begin(), side.end());
  const MeanDirections pooled_mu = mean_directions(assemble_sample(combined));

  out << "mean resultant lengths: frontal (" << fmt(frontal_mu.rbar[0], 4) << ", "
      << fmt(frontal_mu.rbar[1], 4) << "), side (" << fmt(side_mu.rbar[0], 4) << ", "
      << fmt(side_mu.rbar[1], 4) << "), combined (" << fmt(pooled_mu.rbar[0], 4) << ", "
      << fmt(pooled_mu.rbar[1], 4) << ")\n";
  for (int s = 0; s < 2; ++s)
    out << "combined mean direction " << s + 1 << ": (" << fmt(pooled_mu.mu[s][0], 4) << ", "
        << fmt(pooled_mu.mu[s][1], 4) << ", " << fmt(pooled_mu.mu[s][2], 4) << ")\n";
  out << "\n";

  const TestReport two_sample = two_sample_hotelling(frontal_sample, side_sample);
  out << two_sample.summary() << "\n\n";

  out << "per-component directional statistics, side views against the frontal mean:\n";
  for (int s = 0; s < 2; ++s) {
    const double t2 = directional_t_squared_component(side_sample, frontal_mu.mu[s], s);
    out << "  component " << s + 1 << ": T2 = " << fmt(t2, 4) << " (T2/n = "
        << fmt(t2 / side_sample.n(), 4) << ")\n";
  }
  out << "\n";

  const ConfidenceRegion region = bootstrap_confidence_region(
      frontal_sample, b, seed, 0.05, ConfidenceRegion::Mode::bonferroni);
  const std::vector<double> stats = region.membership_statistics(side_mu.mu);
  out << "95% bootstrap confidence region from the frontal views (per-component quantiles at "
         "1 - alpha/q = 0.975, B = "
      << b << ", seed = " << seed << "):\n";
  for (int s = 0; s < 2; ++s)
    out << "  component " << s + 1 << ": threshold T*2 = "
        << fmt(region.component_thresholds[s], 2) << ", side-view statistic T2 = "
        << fmt(stats[s], 2) << (stats[s] <= region.component_thresholds[s] ? " (inside)"
                                                                           : " (outside)")
        << "\n";
  out << (region.contains(side_mu.mu)
              ? "side-view mean inside the region: same mean projective shape"
              : "side-view mean outside the region")
      << "\n";

  ReproduceResult result;
  result.report = out.str();
  return result;
}

}  // namespace

ReproduceResult reproduce_case(const std::string& id, int b, std::uint64_t seed) {
  if (id == "ex5.1") return reproduce_ex51(b, seed);
  if (id == "ex5.2") return reproduce_ex52(b, seed);
  if (id == "ex5.3") return reproduce_ex53(b, seed);
  throw ArgumentError("unknown case '" + id + "' (expected ex5.1, ex5.2 or ex5.3)");
}

}  // namespace projshape
