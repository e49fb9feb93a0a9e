#include "projshape/extrinsic.hpp"

#include <cmath>
#include <optional>

#include "projshape/bootstrap.hpp"
#include "projshape/errors.hpp"
#include "projshape/special_functions.hpp"
#include "projshape/tolerances.hpp"

namespace projshape {

namespace {

// Sample laid out per component: q matrices of n unit rows.
std::vector<Eigen::MatrixXd> component_rows(const std::vector<ProjectiveShape>& sample) {
  if (sample.empty()) throw ArgumentError("extrinsic: need n >= 1 shapes");
  const int m = sample.front().m;
  const int q = sample.front().q();
  const int n = static_cast<int>(sample.size());
  for (const auto& s : sample)
    if (s.m != m || s.q() != q)
      throw ArgumentError("extrinsic: shapes disagree in dimensions");

  std::vector<Eigen::MatrixXd> rows(q, Eigen::MatrixXd(n, m + 1));
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < q; ++s) rows[s].row(r) = sample[r].axes[s].unit().transpose();
  return rows;
}

ComponentEigen component_eigen(const Eigen::MatrixXd& rows) {
  const int n = static_cast<int>(rows.rows());
  ComponentEigen out;
  out.moment = rows.transpose() * rows / n;
  const SymmetricEigen eig = jacobi_eigen(out.moment);
  out.values = eig.values;
  out.vectors = eig.vectors;
  const int top = static_cast<int>(eig.values.size()) - 1;
  out.relative_gap =
      (eig.values[top] - eig.values[top - 1]) / std::max(out.moment.trace(), 1e-300);
  return out;
}

EigenSummary eigen_summary_of(const std::vector<Eigen::MatrixXd>& rows, int m) {
  EigenSummary summary;
  summary.q = static_cast<int>(rows.size());
  summary.n = static_cast<int>(rows.front().rows());
  summary.m = m;
  summary.components.reserve(rows.size());
  for (const auto& r : rows) summary.components.push_back(component_eigen(r));
  return summary;
}

void require_simple_top(const EigenSummary& summary) {
  for (std::size_t s = 0; s < summary.components.size(); ++s) {
    if (summary.components[s].relative_gap <= tol::gap)
      throw MeanNotUnique("component " + std::to_string(s + 1) +
                          ": top eigenvalue not simple, extrinsic mean undefined");
  }
}

Eigen::MatrixXd covariance_g_of(const std::vector<Eigen::MatrixXd>& rows,
                                const EigenSummary& eigen) {
  const int q = eigen.q;
  const int m = eigen.m;
  const int n = eigen.n;
  const int big_m = m * q;

  // Tangential and top projections of every observation, reused across entries.
  std::vector<Eigen::MatrixXd> proj(q);  // n x m, entry (r,a) = g_s(a)^T X_{r,s}
  std::vector<Eigen::VectorXd> top(q);   // n,     entry r     = g_s(m+1)^T X_{r,s}
  for (int s = 0; s < q; ++s) {
    const Eigen::MatrixXd& g = eigen.components[s].vectors;
    proj[s] = rows[s] * g.leftCols(m);
    top[s] = rows[s] * g.col(m);
  }

  Eigen::MatrixXd gmat(big_m, big_m);
  for (int s = 0; s < q; ++s) {
    const Eigen::VectorXd& ds = eigen.components[s].values;
    for (int a = 0; a < m; ++a) {
      const double denom_s = ds[m] - ds[a];
      for (int t = 0; t < q; ++t) {
        const Eigen::VectorXd& dt = eigen.components[t].values;
        for (int b = 0; b < m; ++b) {
          const double denom_t = dt[m] - dt[b];
          double sum = 0.0;
          for (int r = 0; r < n; ++r)
            sum += proj[s](r, a) * proj[t](r, b) * top[s][r] * top[t][r];
          gmat(s * m + a, t * m + b) = sum / (n * denom_s * denom_t);
        }
      }
    }
  }
  return gmat;
}

// G^{-1} with an invertibility check relative to the largest eigenvalue.
std::optional<Eigen::MatrixXd> invert_g(const Eigen::MatrixXd& gmat) {
  const SymmetricEigen eig = jacobi_eigen(gmat);
  const double max_eig = eig.values.maxCoeff();
  if (max_eig <= 0.0 || eig.values.minCoeff() <= tol::invertible * max_eig) return std::nullopt;
  Eigen::MatrixXd inv = Eigen::MatrixXd::Zero(gmat.rows(), gmat.cols());
  for (int j = 0; j < eig.values.size(); ++j)
    inv += eig.vectors.col(j) * eig.vectors.col(j).transpose() / eig.values[j];
  return inv;
}

double t_squared_statistic(const std::vector<Eigen::MatrixXd>& rows, const EigenSummary& eigen,
                           const std::vector<Eigen::VectorXd>& gamma) {
  const int q = eigen.q;
  const int m = eigen.m;
  Eigen::VectorXd w(m * q);
  for (int s = 0; s < q; ++s) {
    const Eigen::MatrixXd& g = eigen.components[s].vectors;
    Eigen::VectorXd rep = gamma[s];
    if (rep.dot(g.col(m)) < 0.0) rep = -rep;  // sign-align to the sample mean axis
    w.segment(s * m, m) = g.leftCols(m).transpose() * rep;
  }
  const Eigen::MatrixXd gmat = covariance_g_of(rows, eigen);
  const std::optional<Eigen::MatrixXd> inv = invert_g(gmat);
  if (!inv)
    throw SingularCovariance(
        "extrinsic T^2: covariance G is singular (try the bootstrap or more data)");
  return eigen.n * w.dot(*inv * w);
}

}  // namespace

Eigen::MatrixXd veronese_embed(const AxialPoint& z) {
  return z.unit() * z.unit().transpose();
}

EigenSummary eigen_summary(const std::vector<ProjectiveShape>& sample) {
  return eigen_summary_of(component_rows(sample), sample.front().m);
}

ExtrinsicMean extrinsic_mean(const std::vector<ProjectiveShape>& sample) {
  EigenSummary summary = eigen_summary(sample);
  require_simple_top(summary);
  ExtrinsicMean mean;
  mean.n = summary.n;
  for (const auto& comp : summary.components)
    mean.axes.emplace_back(comp.vectors.col(summary.m));
  mean.eigen = std::move(summary);
  return mean;
}

double frechet_function(const std::vector<ProjectiveShape>& sample,
                        const std::vector<AxialPoint>& candidate) {
  const int q = sample.front().q();
  if (static_cast<int>(candidate.size()) != q)
    throw ArgumentError("frechet_function: candidate has wrong number of components");
  double total = 0.0;
  for (const auto& shape : sample) {
    for (int s = 0; s < q; ++s) {
      const double cos2 = std::pow(shape.axes[s].unit().dot(candidate[s].unit()), 2);
      total += 2.0 * (1.0 - cos2);  // ||zz^T - cc^T||_F^2
    }
  }
  return total / static_cast<double>(sample.size());
}

Eigen::MatrixXd covariance_g(const std::vector<ProjectiveShape>& sample,
                             const EigenSummary& eigen) {
  require_simple_top(eigen);
  return covariance_g_of(component_rows(sample), eigen);
}

double extrinsic_t_squared(const std::vector<ProjectiveShape>& sample,
                           const std::vector<AxialPoint>& mu0) {
  const std::vector<Eigen::MatrixXd> rows = component_rows(sample);
  EigenSummary summary = eigen_summary_of(rows, sample.front().m);
  require_simple_top(summary);
  if (static_cast<int>(mu0.size()) != summary.q)
    throw ArgumentError("extrinsic test: mu0 has wrong number of components");
  std::vector<Eigen::VectorXd> gamma;
  gamma.reserve(mu0.size());
  for (const auto& axis : mu0) gamma.push_back(axis.unit());
  return t_squared_statistic(rows, summary, gamma);
}

TestReport one_sample_extrinsic_test(const std::vector<ProjectiveShape>& sample,
                                     const std::vector<AxialPoint>& mu0) {
  const int m = sample.front().m;
  const int q = sample.front().q();
  const int big_m = m * q;
  TestReport report;
  report.name = "one-sample extrinsic test";
  report.statistic_name = "T2";
  report.statistic = extrinsic_t_squared(sample, mu0);
  report.reference = "chi2(" + std::to_string(big_m) + ")";
  report.df1 = big_m;
  report.p_value = chi_squared_tail(report.statistic, big_m);
  return report;
}

BootstrapDistribution bootstrap_extrinsic_test(const std::vector<ProjectiveShape>& sample,
                                               int b, std::uint64_t seed) {
  const std::vector<Eigen::MatrixXd> rows = component_rows(sample);
  const int m = sample.front().m;
  const int q = sample.front().q();
  const int n = static_cast<int>(sample.size());

  EigenSummary original = eigen_summary_of(rows, m);
  require_simple_top(original);
  std::vector<Eigen::VectorXd> gamma;
  gamma.reserve(q);
  for (int s = 0; s < q; ++s) gamma.push_back(original.components[s].vectors.col(m));

  const auto pivot = [&](const std::vector<int>& indices) -> std::optional<double> {
    std::vector<Eigen::MatrixXd> resampled(q, Eigen::MatrixXd(n, m + 1));
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < q; ++s) resampled[s].row(r) = rows[s].row(indices[r]);
    EigenSummary summary = eigen_summary_of(resampled, m);
    for (const auto& comp : summary.components)
      if (comp.relative_gap <= tol::gap) return std::nullopt;
    try {
      return t_squared_statistic(resampled, summary, gamma);
    } catch (const SingularCovariance&) {
      return std::nullopt;
    }
  };
  return bootstrap_distribution(n, b, seed, pivot);
}

}  // namespace projshape
