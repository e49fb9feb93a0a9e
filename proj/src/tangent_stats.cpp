#include "projshape/tangent_stats.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "projshape/bootstrap.hpp"
#include "projshape/errors.hpp"
#include "projshape/special_functions.hpp"
#include "projshape/symmetric_eigen.hpp"
#include "projshape/tolerances.hpp"

namespace projshape {

namespace {

constexpr double kConcentrationWarning = 0.9;

void check_dimensions(const DirectionalSample& sample) {
  if (sample.n() < 1) throw ArgumentError("tangent statistics: empty sample");
}

MeanDirections align_mu0(const MeanDirections& mu0, const MeanDirections& sample_means) {
  MeanDirections out = mu0;
  for (int s = 0; s < mu0.q; ++s)
    if (out.mu[s].dot(sample_means.mu[s]) < 0.0) out.mu[s] = -out.mu[s];
  return out;
}

// Covariance about the group mean with divisor n (so that n*S is the scatter).
Eigen::MatrixXd scatter_covariance(const std::vector<Eigen::VectorXd>& rows,
                                   const Eigen::VectorXd& mean) {
  const int dim = static_cast<int>(mean.size());
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& r : rows) {
    const Eigen::VectorXd c = r - mean;
    s += c * c.transpose();
  }
  return s / static_cast<double>(rows.size());
}

Eigen::VectorXd mean_of(const std::vector<Eigen::VectorXd>& rows) {
  Eigen::VectorXd m = Eigen::VectorXd::Zero(rows.front().size());
  for (const auto& r : rows) m += r;
  return m / static_cast<double>(rows.size());
}

// G(y): M x M matrix of m x m blocks
// G_ab = (n rbar_a rbar_b)^{-1} sum_r (E_a^T y_r^a)(E_b^T y_r^b)^T.
Eigen::MatrixXd directional_covariance(const DirectionalSample& sample,
                                       const MeanDirections& means,
                                       const std::vector<Eigen::MatrixXd>& frames) {
  const int n = sample.n();
  const int m = sample.m;
  const int q = sample.q;
  std::vector<Eigen::MatrixXd> coords(q, Eigen::MatrixXd(n, m));
  for (int s = 0; s < q; ++s)
    for (int r = 0; r < n; ++r)
      coords[s].row(r) = (frames[s].transpose() * sample.data[r][s]).transpose();

  Eigen::MatrixXd g(m * q, m * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      g.block(a * m, b * m, m, m) = coords[a].transpose() * coords[b] /
                                    (n * means.rbar[a] * means.rbar[b]);
  return g;
}

std::optional<Eigen::MatrixXd> invert_spd(const Eigen::MatrixXd& g) {
  const SymmetricEigen eig = jacobi_eigen(g);
  const double max_eig = eig.values.maxCoeff();
  if (max_eig <= 0.0 || eig.values.minCoeff() <= tol::invertible * max_eig) return std::nullopt;
  Eigen::MatrixXd inv = Eigen::MatrixXd::Zero(g.rows(), g.cols());
  for (int j = 0; j < eig.values.size(); ++j)
    inv += eig.vectors.col(j) * eig.vectors.col(j).transpose() / eig.values[j];
  return inv;
}

std::optional<MeanDirections> try_mean_directions(const DirectionalSample& sample) {
  MeanDirections out;
  out.m = sample.m;
  out.q = sample.q;
  for (int s = 0; s < sample.q; ++s) {
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(sample.m + 1);
    for (int r = 0; r < sample.n(); ++r) sum += sample.data[r][s];
    sum /= static_cast<double>(sample.n());
    const double rbar = sum.norm();
    if (rbar <= tol::det) return std::nullopt;
    out.mu.push_back(sum / rbar);
    out.rbar.push_back(rbar);
  }
  return out;
}

// Joint or single-component directional pivot; nullopt when degenerate.
std::optional<double> directional_pivot(const DirectionalSample& resample,
                                        const MeanDirections& hypothesized, int component) {
  const std::optional<MeanDirections> means = try_mean_directions(resample);
  if (!means) return std::nullopt;

  const int m = resample.m;
  if (component >= 0) {
    const Eigen::MatrixXd frame = tangent_frame(means->mu[component]);
    Eigen::VectorXd rep = hypothesized.mu[component];
    if (rep.dot(means->mu[component]) < 0.0) rep = -rep;
    const Eigen::VectorXd d = frame.transpose() * (means->mu[component] - rep);

    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(m, m);
    for (int r = 0; r < resample.n(); ++r) {
      const Eigen::VectorXd c = frame.transpose() * resample.data[r][component];
      g += c * c.transpose();
    }
    g /= resample.n() * means->rbar[component] * means->rbar[component];
    const std::optional<Eigen::MatrixXd> inv = invert_spd(g);
    if (!inv) return std::nullopt;
    return resample.n() * d.dot(*inv * d);
  }

  std::vector<Eigen::MatrixXd> frames;
  frames.reserve(resample.q);
  for (int s = 0; s < resample.q; ++s) frames.push_back(tangent_frame(means->mu[s]));
  Eigen::VectorXd d(m * resample.q);
  for (int s = 0; s < resample.q; ++s) {
    Eigen::VectorXd rep = hypothesized.mu[s];
    if (rep.dot(means->mu[s]) < 0.0) rep = -rep;
    d.segment(s * m, m) = frames[s].transpose() * (means->mu[s] - rep);
  }
  const Eigen::MatrixXd g = directional_covariance(resample, *means, frames);
  const std::optional<Eigen::MatrixXd> inv = invert_spd(g);
  if (!inv) return std::nullopt;
  return resample.n() * d.dot(*inv * d);
}

DirectionalSample resample_of(const DirectionalSample& sample, const std::vector<int>& indices) {
  DirectionalSample out;
  out.m = sample.m;
  out.q = sample.q;
  out.data.reserve(indices.size());
  for (int i : indices) out.data.push_back(sample.data[i]);
  return out;
}

TestReport hotelling_two_groups(const std::vector<Eigen::VectorXd>& group1,
                                const std::vector<Eigen::VectorXd>& group2,
                                const std::string& name) {
  const int n1 = static_cast<int>(group1.size());
  const int n2 = static_cast<int>(group2.size());
  const int dim = static_cast<int>(group1.front().size());
  if (n1 + n2 <= dim + 1)
    throw InsufficientData(name + ": need n1 + n2 > M + 1 observations");

  const PooledCovariance pooled = pooled_covariance(group1, group2);
  const Eigen::VectorXd diff = mean_of(group1) - mean_of(group2);
  const double d2 = diff.dot(pooled.pinv * diff);

  const int m_eff = pooled.rank;
  const double df2 = n1 + n2 - m_eff - 1;
  const double f = static_cast<double>(n1) * n2 * df2 * d2 /
                   (static_cast<double>(n1 + n2) * (n1 + n2 - 2) * m_eff);

  TestReport report;
  report.name = name;
  report.statistic_name = "F";
  report.statistic = f;
  report.df1 = m_eff;
  report.df2 = df2;
  report.reference = "F(" + std::to_string(m_eff) + "," + std::to_string(int(df2)) + ")";
  report.p_value = f_tail(f, m_eff, df2);
  if (m_eff < dim)
    report.notes.push_back("pooled covariance rank-deficient: rank " + std::to_string(m_eff) +
                           " < M = " + std::to_string(dim) +
                           "; pseudo-inverse with reduced degrees of freedom");
  return report;
}

}  // namespace

MeanDirections mean_directions(const DirectionalSample& sample) {
  check_dimensions(sample);
  const std::optional<MeanDirections> out = try_mean_directions(sample);
  if (!out)
    throw UndefinedMeanDirection("mean_directions: zero resultant, mean direction undefined");
  return *out;
}

Eigen::MatrixXd tangent_frame(const Eigen::VectorXd& mu) {
  const int dim = static_cast<int>(mu.size());
  int skip = 0;
  for (int i = 1; i < dim; ++i)
    if (std::abs(mu[i]) > std::abs(mu[skip])) skip = i;

  Eigen::MatrixXd frame(dim, dim - 1);
  int col = 0;
  for (int i = 0; i < dim; ++i) {
    if (i == skip) continue;
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    e[i] = 1.0;
    e -= mu.dot(e) * mu;
    for (int j = 0; j < col; ++j) e -= frame.col(j).dot(e) * frame.col(j);
    const double norm = e.norm();
    if (norm <= tol::nonzero) throw InternalError("tangent_frame: degenerate Gram-Schmidt step");
    frame.col(col++) = e / norm;
  }
  return frame;
}

Eigen::VectorXd tangent_residual(const Eigen::VectorXd& x, const Eigen::VectorXd& mu) {
  return x - mu.dot(x) * mu;
}

std::vector<Eigen::VectorXd> tangent_coords(const DirectionalSample& sample,
                                            const MeanDirections& mu) {
  check_dimensions(sample);
  if (mu.q != sample.q || mu.m != sample.m)
    throw ArgumentError("tangent_coords: mean/sample dimension mismatch");
  const int m = sample.m;
  std::vector<Eigen::MatrixXd> frames;
  frames.reserve(sample.q);
  for (int s = 0; s < sample.q; ++s) frames.push_back(tangent_frame(mu.mu[s]));

  std::vector<Eigen::VectorXd> coords;
  coords.reserve(sample.n());
  for (int r = 0; r < sample.n(); ++r) {
    Eigen::VectorXd row(m * sample.q);
    for (int s = 0; s < sample.q; ++s)
      row.segment(s * m, m) = frames[s].transpose() * sample.data[r][s];
    coords.push_back(std::move(row));
  }
  return coords;
}

TangentDecomposition decompose_offset(const MeanDirections& sample_means,
                                      const MeanDirections& mu0) {
  if (sample_means.q != mu0.q || sample_means.m != mu0.m)
    throw ArgumentError("decompose_offset: dimension mismatch");
  const int m = sample_means.m;
  const MeanDirections aligned = align_mu0(mu0, sample_means);

  TangentDecomposition out;
  out.d.resize(m * sample_means.q);
  for (int s = 0; s < sample_means.q; ++s) {
    out.frames.push_back(tangent_frame(sample_means.mu[s]));
    const Eigen::VectorXd diff = sample_means.mu[s] - aligned.mu[s];
    const Eigen::VectorXd d_s = out.frames[s].transpose() * diff;
    out.d.segment(s * m, m) = d_s;
    out.nu.push_back((diff - out.frames[s] * d_s).norm());
  }
  return out;
}

PooledCovariance pooled_covariance(const std::vector<Eigen::VectorXd>& group1,
                                   const std::vector<Eigen::VectorXd>& group2) {
  if (group1.empty() || group2.empty())
    throw ArgumentError("pooled_covariance: empty group");
  const int n1 = static_cast<int>(group1.size());
  const int n2 = static_cast<int>(group2.size());
  if (n1 + n2 < 3) throw InsufficientData("pooled_covariance: need n1 + n2 >= 3");

  PooledCovariance out;
  out.s = (n1 * scatter_covariance(group1, mean_of(group1)) +
           n2 * scatter_covariance(group2, mean_of(group2))) /
          static_cast<double>(n1 + n2 - 2);
  out.pinv = symmetric_pseudo_inverse(out.s, tol::pinv_rank, &out.rank);
  return out;
}

TestReport one_sample_hotelling(const DirectionalSample& sample, const MeanDirections& mu0) {
  check_dimensions(sample);
  const int m = sample.m;
  const int q = sample.q;
  const int big_m = m * q;
  const int n = sample.n();
  if (n <= big_m) throw InsufficientData("one_sample_hotelling: need n > M");

  const MeanDirections means = mean_directions(sample);
  // Classical construction: tangent coordinates about the hypothesized mean,
  // then Hotelling's test of zero mean offset. For M = 1 this is exactly the
  // squared one-sample t statistic on the signed tangent coordinates.
  const MeanDirections mu0_aligned = align_mu0(mu0, means);
  const std::vector<Eigen::VectorXd> coords = tangent_coords(sample, mu0_aligned);
  const Eigen::VectorXd offset_mean = mean_of(coords);
  const Eigen::MatrixXd s = scatter_covariance(coords, offset_mean);

  int rank = 0;
  const Eigen::MatrixXd pinv = symmetric_pseudo_inverse(s, tol::pinv_rank, &rank);
  const double d2 = offset_mean.dot(pinv * offset_mean);
  const double f = (static_cast<double>(n) - big_m) / big_m * d2;

  TestReport report;
  report.name = "one-sample tangent Hotelling test";
  report.statistic_name = "F";
  report.statistic = f;
  report.df1 = big_m;
  report.df2 = n - big_m;
  report.reference = "F(" + std::to_string(big_m) + "," + std::to_string(n - big_m) + ")";
  report.p_value = f_tail(f, big_m, n - big_m);
  report.p_value_asymptotic = chi_squared_tail(big_m * f, big_m);
  for (int s_idx = 0; s_idx < q; ++s_idx)
    if (means.rbar[s_idx] < kConcentrationWarning)
      report.notes.push_back("component " + std::to_string(s_idx + 1) + " rbar = " +
                             std::to_string(means.rbar[s_idx]) +
                             " < 0.9: tangent approximation dubious");
  if (rank < big_m)
    report.notes.push_back("tangent covariance rank " + std::to_string(rank) + " < M");
  return report;
}

TestReport two_sample_hotelling(const DirectionalSample& sample1,
                                const DirectionalSample& sample2) {
  if (sample1.m != sample2.m || sample1.q != sample2.q)
    throw ArgumentError("two_sample_hotelling: samples disagree in dimensions");

  // Combined mean directions; group-2 representatives are aligned to them so
  // both groups live in the same half-spaces.
  DirectionalSample combined = sample1;
  combined.data.insert(combined.data.end(), sample2.data.begin(), sample2.data.end());
  const MeanDirections pooled_means = mean_directions(combined);
  const DirectionalSample s1 = align_to_references(sample1, pooled_means.mu);
  const DirectionalSample s2 = align_to_references(sample2, pooled_means.mu);

  const std::vector<Eigen::VectorXd> v = tangent_coords(s1, pooled_means);
  const std::vector<Eigen::VectorXd> w = tangent_coords(s2, pooled_means);
  TestReport report = hotelling_two_groups(v, w, "two-sample tangent Hotelling test");
  for (int s_idx = 0; s_idx < pooled_means.q; ++s_idx)
    if (pooled_means.rbar[s_idx] < kConcentrationWarning)
      report.notes.push_back("component " + std::to_string(s_idx + 1) + " rbar = " +
                             std::to_string(pooled_means.rbar[s_idx]) +
                             " < 0.9: tangent approximation dubious");
  return report;
}

TestReport euclidean_two_sample_hotelling(const std::vector<Eigen::VectorXd>& group1,
                                          const std::vector<Eigen::VectorXd>& group2) {
  if (group1.empty() || group2.empty())
    throw ArgumentError("euclidean_two_sample_hotelling: empty group");
  return hotelling_two_groups(group1, group2, "two-sample Hotelling test on invariants");
}

TestReport watson_williams(const std::vector<double>& angles, double theta0) {
  const int n = static_cast<int>(angles.size());
  if (n < 2) throw InsufficientData("watson_williams: need n >= 2 directions");
  double cx = 0.0, cy = 0.0;
  for (double theta : angles) {
    cx += std::cos(theta);
    cy += std::sin(theta);
  }
  const double resultant = std::hypot(cx, cy);
  if (resultant <= tol::det)
    throw UndefinedMeanDirection("watson_williams: zero resultant");
  const double projected = std::cos(theta0) * cx + std::sin(theta0) * cy;
  // all angles coincident: both numerator and denominator vanish
  double f = 0.0;
  if (n - resultant > 1e-12 * n) {
    f = (n - 1) * (resultant - projected) / (n - resultant);
  } else if (resultant - projected > 1e-12 * n) {
    f = std::numeric_limits<double>::infinity();
  }

  TestReport report;
  report.name = "Watson-Williams test";
  report.statistic_name = "F1";
  report.statistic = f;
  report.df1 = 1;
  report.df2 = n - 1;
  report.reference = "F(1," + std::to_string(n - 1) + ")";
  report.p_value = f_tail(f, 1, n - 1);
  return report;
}

double directional_t_squared_statistic(const DirectionalSample& sample,
                                       const MeanDirections& mu0) {
  const std::optional<double> t2 = directional_pivot(sample, mu0, -1);
  if (!t2) throw SingularCovariance("directional T^2: covariance G(y) is singular");
  return *t2;
}

double directional_t_squared_component(const DirectionalSample& sample,
                                       const Eigen::VectorXd& mu0_component, int component) {
  if (component < 0 || component >= sample.q)
    throw ArgumentError("directional T^2: component out of range");
  MeanDirections hypothesized;
  hypothesized.m = sample.m;
  hypothesized.q = sample.q;
  hypothesized.mu.assign(sample.q, mu0_component);
  hypothesized.rbar.assign(sample.q, 1.0);
  const std::optional<double> t2 = directional_pivot(sample, hypothesized, component);
  if (!t2) throw SingularCovariance("directional T^2: covariance G(y) is singular");
  return *t2;
}

TestReport directional_t_squared(const DirectionalSample& sample, const MeanDirections& mu0) {
  const int big_m = sample.m * sample.q;
  TestReport report;
  report.name = "directional T^2 test";
  report.statistic_name = "T2";
  report.statistic = directional_t_squared_statistic(sample, mu0);
  report.df1 = big_m;
  report.reference = "chi2(" + std::to_string(big_m) + ")";
  report.p_value = chi_squared_tail(report.statistic, big_m);
  return report;
}

std::vector<double> ConfidenceRegion::membership_statistics(
    const std::vector<Eigen::VectorXd>& mu) const {
  if (static_cast<int>(mu.size()) != sample.q)
    throw ArgumentError("confidence region: candidate has wrong number of components");
  MeanDirections candidate;
  candidate.m = sample.m;
  candidate.q = sample.q;
  candidate.mu = mu;
  candidate.rbar.assign(sample.q, 1.0);

  std::vector<double> stats;
  if (mode == Mode::joint) {
    stats.push_back(directional_t_squared_statistic(sample, candidate));
  } else {
    for (int s = 0; s < sample.q; ++s)
      stats.push_back(directional_t_squared_component(sample, mu[s], s));
  }
  return stats;
}

bool ConfidenceRegion::contains(const std::vector<Eigen::VectorXd>& mu) const {
  const std::vector<double> stats = membership_statistics(mu);
  if (mode == Mode::joint) return stats[0] <= joint_threshold;
  for (int s = 0; s < sample.q; ++s)
    if (stats[s] > component_thresholds[s]) return false;
  return true;
}

ConfidenceRegion bootstrap_confidence_region(const DirectionalSample& sample, int b,
                                             std::uint64_t seed, double alpha,
                                             ConfidenceRegion::Mode mode) {
  if (alpha <= 0.0 || alpha > 1.0)
    throw ArgumentError("bootstrap_confidence_region: require 0 < alpha <= 1");
  const MeanDirections original = mean_directions(sample);

  ConfidenceRegion region;
  region.mode = mode;
  region.alpha = alpha;
  region.sample = sample;

  if (alpha == 1.0) {
    // Degenerate region: only the sample mean itself (pivot 0) belongs.
    if (mode == ConfidenceRegion::Mode::joint) {
      region.joint_threshold = 0.0;
    } else {
      region.component_thresholds.assign(sample.q, 0.0);
    }
    return region;
  }

  if (mode == ConfidenceRegion::Mode::joint) {
    const auto pivot = [&](const std::vector<int>& indices) -> std::optional<double> {
      return directional_pivot(resample_of(sample, indices), original, -1);
    };
    region.pivots.push_back(bootstrap_distribution(sample.n(), b, seed, pivot));
    region.joint_threshold = region.pivots[0].quantile(1.0 - alpha);
  } else {
    for (int s = 0; s < sample.q; ++s) {
      const auto pivot = [&](const std::vector<int>& indices) -> std::optional<double> {
        return directional_pivot(resample_of(sample, indices), original, s);
      };
      // Substream block per component keeps the component draws independent.
      region.pivots.push_back(
          bootstrap_distribution(sample.n(), b, seed + 0x100000000ULL * s, pivot));
      region.component_thresholds.push_back(
          region.pivots[s].quantile(1.0 - alpha / sample.q));
    }
  }
  return region;
}

}  // namespace projshape
