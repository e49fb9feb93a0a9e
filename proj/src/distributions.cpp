#include "projshape/distributions.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "projshape/errors.hpp"
#include "projshape/extrinsic.hpp"
#include "projshape/rng.hpp"
#include "projshape/special_functions.hpp"
#include "projshape/tangent_stats.hpp"

namespace projshape {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double wrap_two_pi(double theta) {
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  return theta;
}

// Unit vector at geodesic distance |eps| from mu along the tangent direction
// composed from the frame columns: the exponential map on S^m.
Eigen::VectorXd exp_map(const Eigen::VectorXd& mu, const Eigen::MatrixXd& frame,
                        const Eigen::VectorXd& eps) {
  const double norm = eps.norm();
  if (norm < 1e-14) return mu;
  const Eigen::VectorXd direction = frame * (eps / norm);
  return std::cos(norm) * mu + std::sin(norm) * direction;
}

}  // namespace

double von_mises_logpdf(double theta, const VonMisesParams& params) {
  if (params.kappa < 0.0) throw ArgumentError("von_mises_logpdf: kappa must be >= 0");
  return params.kappa * std::cos(theta - params.mu) - std::log(kTwoPi) -
         log_bessel_i0(params.kappa);
}

std::vector<double> von_mises_sample(const VonMisesParams& params, int n, std::uint64_t seed,
                                     std::uint64_t stream) {
  if (n < 1) throw ArgumentError("von_mises_sample: need n >= 1");
  if (params.kappa < 0.0) throw ArgumentError("von_mises_sample: kappa must be >= 0");

  RngStream rng(seed, stream);
  std::vector<double> out;
  out.reserve(n);

  if (params.kappa < 1e-12) {
    for (int i = 0; i < n; ++i) out.push_back(kTwoPi * rng.next_double());
    return out;
  }

  // Best & Fisher (1979): wrapped Cauchy envelope.
  const double kappa = params.kappa;
  const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
  const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
  const double r = (1.0 + rho * rho) / (2.0 * rho);

  for (int i = 0; i < n; ++i) {
    double f = 0.0;
    for (;;) {
      const double u1 = rng.next_double();
      const double u2 = rng.next_double();
      const double z = std::cos(M_PI * u1);
      f = (1.0 + r * z) / (r + z);
      const double c = kappa * (r - f);
      if (c * (2.0 - c) - u2 > 0.0) break;
      if (u2 > 1e-300 && std::log(c / u2) + 1.0 - c >= 0.0) break;
    }
    const double u3 = rng.next_double();
    const double angle = (u3 < 0.5 ? -1.0 : 1.0) * std::acos(std::clamp(f, -1.0, 1.0));
    out.push_back(wrap_two_pi(params.mu + angle));
  }
  return out;
}

MultivariateVonMisesParams MultivariateVonMisesParams::zero(int q) {
  MultivariateVonMisesParams p;
  p.a = Eigen::VectorXd::Zero(q);
  p.b = Eigen::VectorXd::Zero(q);
  p.cos_cos = Eigen::MatrixXd::Zero(q, q);
  p.cos_sin = Eigen::MatrixXd::Zero(q, q);
  p.sin_sin = Eigen::MatrixXd::Zero(q, q);
  return p;
}

void MultivariateVonMisesParams::validate() const {
  const int n = q();
  if (b.size() != n || cos_cos.rows() != n || cos_cos.cols() != n || cos_sin.rows() != n ||
      cos_sin.cols() != n || sin_sin.rows() != n || sin_sin.cols() != n)
    throw ArgumentError("MultivariateVonMisesParams: inconsistent sizes");
  for (int s = 0; s < n; ++s)
    if (cos_cos(s, s) != 0.0 || cos_sin(s, s) != 0.0 || sin_sin(s, s) != 0.0)
      throw ArgumentError("MultivariateVonMisesParams: coupling diagonals must be zero");
}

double multivariate_vm_logdensity_unnormalized(const std::vector<double>& thetas,
                                               const MultivariateVonMisesParams& params) {
  params.validate();
  const int q = params.q();
  if (static_cast<int>(thetas.size()) != q)
    throw ArgumentError("multivariate_vm_logdensity: wrong number of angles");

  Eigen::VectorXd c(q), s(q);
  for (int i = 0; i < q; ++i) {
    c[i] = std::cos(thetas[i]);
    s[i] = std::sin(thetas[i]);
  }
  double value = params.a.dot(c) + params.b.dot(s);
  value += c.dot(params.cos_cos * c);
  value += c.dot(params.cos_sin * s);
  value += s.dot(params.sin_sin * s);
  return value;
}

double dimroth_watson_logdensity_unnormalized(const AxialPoint& z,
                                              const DimrothWatsonParams& params) {
  if (params.mu.size() != z.unit().size())
    throw ArgumentError("dimroth_watson: dimension mismatch");
  const double dot = params.mu.normalized().dot(z.unit());
  return params.k * dot * dot;
}

std::string CalibrationReport::to_text() const {
  std::ostringstream out;
  out << "scenario            statistic        reference    reps  degen  exceed95 (se)      exceed99 (se)\n";
  for (const auto& r : rows) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-19s %-16s %-12s %5d  %5d  %.4f (%.4f)    %.4f (%.4f)\n",
                  r.scenario.c_str(), r.statistic.c_str(), r.reference.c_str(), r.replications,
                  r.degenerate, r.exceed95, r.se95, r.exceed99, r.se99);
    out << line;
  }
  return out.str();
}

std::string CalibrationReport::to_csv() const {
  std::ostringstream out;
  out << "scenario,statistic,reference,replications,degenerate,exceed95,se95,exceed99,se99\n";
  for (const auto& r : rows) {
    char line[256];
    std::snprintf(line, sizeof(line), "%s,%s,%s,%d,%d,%.6f,%.6f,%.6f,%.6f\n", r.scenario.c_str(),
                  r.statistic.c_str(), r.reference.c_str(), r.replications, r.degenerate,
                  r.exceed95, r.se95, r.exceed99, r.se99);
    out << line;
  }
  return out.str();
}

CalibrationReport calibration_harness(const std::string& scenario, int n, int reps,
                                      std::uint64_t seed, double kappa) {
  if (n < 3 || reps < 1) throw ArgumentError("calibration_harness: need n >= 3, reps >= 1");

  CalibrationRow row;
  row.scenario = scenario;
  row.replications = reps;

  int exceed95 = 0, exceed99 = 0, degenerate = 0;

  if (scenario == "extrinsic-m1") {
    // Axes from doubled-angle von Mises noise; the population extrinsic mean
    // axis is at half the mean direction.
    const double kap = kappa > 0.0 ? kappa : 100.0;
    const double theta0 = 0.8;
    const std::vector<AxialPoint> mu0 = {
        AxialPoint(Eigen::Vector2d(std::cos(theta0 / 2.0), std::sin(theta0 / 2.0)))};
    const double crit95 = 3.8414588206941245;  // chi2(1) 95% point
    const double crit99 = 6.6348966010212171;
    row.statistic = "extrinsic T2";
    row.reference = "chi2(1)";
    for (int rep = 0; rep < reps; ++rep) {
      const std::vector<double> thetas =
          von_mises_sample({theta0, kap}, n, seed, static_cast<std::uint64_t>(rep));
      std::vector<ProjectiveShape> shapes;
      shapes.reserve(n);
      for (double t : thetas)
        shapes.push_back(shape_from_axes(
            {Eigen::Vector2d(std::cos(t / 2.0), std::sin(t / 2.0))}, 4));
      try {
        const double t2 = extrinsic_t_squared(shapes, mu0);
        if (t2 > crit95) ++exceed95;
        if (t2 > crit99) ++exceed99;
      } catch (const Error&) {
        ++degenerate;
      }
    }
  } else if (scenario == "tangent-m2q2" || scenario == "directional-m2q1") {
    const bool tangent = scenario == "tangent-m2q2";
    const int m = 2;
    const int q = tangent ? 2 : 1;
    const int big_m = m * q;
    const double kap = kappa > 0.0 ? kappa : (tangent ? 200.0 : 100.0);
    const double sigma = 1.0 / std::sqrt(kap);

    std::vector<Eigen::VectorXd> mu(q);
    mu[0] = Eigen::Vector3d(1.0, 0.0, 0.0);
    if (q > 1) mu[1] = Eigen::Vector3d(0.0, 1.0, 0.0).normalized();
    std::vector<Eigen::MatrixXd> frames;
    for (int s = 0; s < q; ++s) frames.push_back(tangent_frame(mu[s]));

    MeanDirections hypothesized;
    hypothesized.m = m;
    hypothesized.q = q;
    hypothesized.mu = mu;
    hypothesized.rbar.assign(q, 1.0);

    double crit95 = 0.0, crit99 = 0.0;
    if (tangent) {
      row.statistic = "tangent Hotelling F";
      row.reference = "F(" + std::to_string(big_m) + "," + std::to_string(n - big_m) + ")";
      // invert the tail by bisection (done once)
      const auto f_quantile = [&](double p) {
        double lo = 0.0, hi = 100.0;
        for (int i = 0; i < 200; ++i) {
          const double mid = 0.5 * (lo + hi);
          (f_tail(mid, big_m, n - big_m) > p ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
      };
      crit95 = f_quantile(0.05);
      crit99 = f_quantile(0.01);
    } else {
      row.statistic = "directional T2";
      row.reference = "chi2(" + std::to_string(big_m) + ")";
      crit95 = big_m == 2 ? 5.9914645471079817 : 3.8414588206941245;
      crit99 = big_m == 2 ? 9.2103403719761818 : 6.6348966010212171;
    }

    for (int rep = 0; rep < reps; ++rep) {
      RngStream rng(seed, static_cast<std::uint64_t>(rep));
      DirectionalSample sample;
      sample.m = m;
      sample.q = q;
      sample.data.assign(n, std::vector<Eigen::VectorXd>(q));
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < q; ++s) {
          Eigen::VectorXd eps(m);
          for (int j = 0; j < m; ++j) eps[j] = sigma * rng.next_normal();
          sample.data[r][s] = exp_map(mu[s], frames[s], eps);
        }
      }
      try {
        if (tangent) {
          const TestReport rep_out = one_sample_hotelling(sample, hypothesized);
          if (rep_out.statistic > crit95) ++exceed95;
          if (rep_out.statistic > crit99) ++exceed99;
        } else {
          const double t2 = directional_t_squared_statistic(sample, hypothesized);
          if (t2 > crit95) ++exceed95;
          if (t2 > crit99) ++exceed99;
        }
      } catch (const Error&) {
        ++degenerate;
      }
    }
  } else {
    throw ArgumentError("calibration_harness: unknown scenario '" + scenario + "'");
  }

  const int valid = reps - degenerate;
  row.degenerate = degenerate;
  if (valid > 0) {
    row.exceed95 = static_cast<double>(exceed95) / valid;
    row.exceed99 = static_cast<double>(exceed99) / valid;
    row.se95 = std::sqrt(row.exceed95 * (1.0 - row.exceed95) / valid);
    row.se99 = std::sqrt(row.exceed99 * (1.0 - row.exceed99) / valid);
  }

  CalibrationReport report;
  report.rows.push_back(row);
  return report;
}

}  // namespace projshape
