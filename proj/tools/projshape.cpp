// projshape: registration, means and hypothesis tests for projective shapes
// of landmark configurations.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "projshape/dataset.hpp"
#include "projshape/distributions.hpp"
#include "projshape/errors.hpp"
#include "projshape/extrinsic.hpp"
#include "projshape/fixtures.hpp"
#include "projshape/reproduce.hpp"
#include "projshape/rotation_compare.hpp"
#include "projshape/scatter.hpp"
#include "projshape/tangent_stats.hpp"

namespace {

using namespace projshape;

struct CommonOptions {
  std::string input;
  std::string format = "csv";
  std::string frame;
  std::string groups;
  double alpha = 0.05;
  int b = 1000;
  std::uint64_t seed = 0;
  std::string out_dir;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PROJSHAPE_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 12345;
}

LandmarkDataset load_dataset(const CommonOptions& opt) {
  if (opt.input.empty()) throw ArgumentError("--input is required");
  // fixture ids resolve without touching the filesystem
  for (const auto& id : fixture_ids())
    if (opt.input == id) return fixture_dataset(id);
  const DatasetFormat format =
      opt.format == "json" ? DatasetFormat::json : DatasetFormat::csv;
  return parse_dataset(opt.input, format);
}

std::optional<std::vector<int>> parse_frame(const std::string& frame) {
  if (frame.empty()) return std::nullopt;
  std::vector<int> indices;
  std::string token;
  std::istringstream in(frame);
  while (std::getline(in, token, ','))
    indices.push_back(std::stoi(token) - 1);  // user-facing indices are 1-based
  return indices;
}

std::vector<std::string> pick_groups(const LandmarkDataset& dataset, const std::string& groups,
                                     std::size_t count) {
  std::vector<std::string> names;
  if (!groups.empty()) {
    std::string token;
    std::istringstream in(groups);
    while (std::getline(in, token, ',')) names.push_back(token);
  } else {
    for (const auto& g : dataset.groups) names.push_back(g.name);
  }
  if (names.size() < count)
    throw ArgumentError("need at least " + std::to_string(count) + " group(s)");
  names.resize(count);
  return names;
}

void emit(const CommonOptions& opt, const std::string& filename, const std::string& content) {
  if (opt.out_dir.empty()) return;
  std::filesystem::create_directories(opt.out_dir);
  write_text_file(opt.out_dir + "/" + filename, content);
}

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

int run_register(const CommonOptions& opt) {
  const LandmarkDataset dataset = load_dataset(opt);
  std::ostringstream csv;
  csv << "group,view,component";
  for (int c = 0; c <= dataset.m; ++c) csv << ",z" << c + 1;
  csv << "\n";
  for (const auto& group : dataset.groups) {
    const std::vector<ProjectiveShape> shapes =
        shapes_from_group(dataset, group, parse_frame(opt.frame));
    for (std::size_t v = 0; v < shapes.size(); ++v) {
      for (int s = 0; s < shapes[v].q(); ++s) {
        const Eigen::VectorXd z = shapes[v].axes[s].canonical();
        csv << group.name << "," << group.views[v].id << "," << s + 1;
        for (int c = 0; c < z.size(); ++c) csv << "," << fmt(z[c], 6);
        csv << "\n";
      }
    }
  }
  std::cout << csv.str();
  emit(opt, "registered.csv", csv.str());
  return 0;
}

int run_mean(const CommonOptions& opt) {
  const LandmarkDataset dataset = load_dataset(opt);
  for (const auto& group : dataset.groups) {
    const std::vector<ProjectiveShape> shapes =
        shapes_from_group(dataset, group, parse_frame(opt.frame));
    const ExtrinsicMean mean = extrinsic_mean(shapes);
    const MeanDirections directions = mean_directions(assemble_sample(shapes));
    std::cout << "group " << group.name << " (n = " << shapes.size() << ")\n";
    for (int s = 0; s < static_cast<int>(mean.axes.size()); ++s) {
      const Eigen::VectorXd z = mean.axes[s].canonical();
      std::cout << "  component " << s + 1 << ": extrinsic mean [";
      for (int c = 0; c < z.size(); ++c) std::cout << (c ? " : " : "") << fmt(z[c], 4);
      std::cout << "], rbar = " << fmt(directions.rbar[s], 4) << "\n";
    }
  }
  return 0;
}

int run_test1(const CommonOptions& opt, const std::string& mu0_text, double theta0,
              bool use_theta0) {
  const LandmarkDataset dataset = load_dataset(opt);
  const auto names = pick_groups(dataset, opt.groups, 1);
  const std::vector<ProjectiveShape> shapes =
      shapes_from_group(dataset, dataset.group(names[0]), parse_frame(opt.frame));

  if (use_theta0) {
    if (dataset.m != 1) throw ArgumentError("--theta0 applies to m = 1 data only");
    std::vector<double> thetas;
    for (const auto& s : shapes) thetas.push_back(torus_representation(s)[0]);
    std::cout << watson_williams(thetas, theta0).summary() << "\n";
    DirectionalSample sample;
    sample.m = 1;
    sample.q = 1;
    for (double t : thetas) sample.data.push_back({Eigen::Vector2d(std::cos(t), std::sin(t))});
    MeanDirections mu0;
    mu0.m = 1;
    mu0.q = 1;
    mu0.mu.push_back(Eigen::Vector2d(std::cos(theta0), std::sin(theta0)));
    mu0.rbar.push_back(1.0);
    std::cout << one_sample_hotelling(sample, mu0).summary() << "\n";
    const double observed = directional_t_squared_statistic(sample, mu0);
    const ConfidenceRegion region = bootstrap_confidence_region(
        sample, opt.b, opt.seed, opt.alpha, ConfidenceRegion::Mode::joint);
    std::cout << "bootstrap directional pivot: T2 = " << fmt(observed) << ", p = "
              << fmt(region.pivots[0].tail_probability(observed)) << ", B = " << opt.b
              << ", seed = " << opt.seed << "\n";
    return 0;
  }

  if (mu0_text.empty()) throw ArgumentError("test1 needs --mu0 (or --theta0 for m = 1)");
  // components separated by ';', coordinates by ','
  std::vector<AxialPoint> mu0_axes;
  std::vector<Eigen::VectorXd> mu0_vectors;
  std::string component;
  std::istringstream in(mu0_text);
  while (std::getline(in, component, ';')) {
    std::vector<double> coords;
    std::string token;
    std::istringstream comp_in(component);
    while (std::getline(comp_in, token, ',')) coords.push_back(std::stod(token));
    Eigen::VectorXd v(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) v[i] = coords[i];
    mu0_vectors.push_back(v.normalized());
    mu0_axes.emplace_back(v);
  }

  std::cout << one_sample_extrinsic_test(shapes, mu0_axes).summary() << "\n";
  const DirectionalSample sample = assemble_sample(shapes);
  MeanDirections mu0;
  mu0.m = sample.m;
  mu0.q = sample.q;
  mu0.mu = mu0_vectors;
  mu0.rbar.assign(sample.q, 1.0);
  std::cout << one_sample_hotelling(sample, mu0).summary() << "\n";
  std::cout << directional_t_squared(sample, mu0).summary() << "\n";
  const BootstrapDistribution boot = bootstrap_extrinsic_test(shapes, opt.b, opt.seed);
  const double observed = extrinsic_t_squared(shapes, mu0_axes);
  std::cout << "bootstrap extrinsic pivot: T2 = " << fmt(observed) << ", p = "
            << fmt(boot.tail_probability(observed)) << ", B = " << opt.b << ", seed = "
            << opt.seed << ", redrawn = " << boot.rejected << "\n";
  return 0;
}

int run_test2(const CommonOptions& opt) {
  const LandmarkDataset dataset = load_dataset(opt);
  const auto names = pick_groups(dataset, opt.groups, 2);
  const std::vector<ProjectiveShape> shapes1 =
      shapes_from_group(dataset, dataset.group(names[0]), parse_frame(opt.frame));
  const std::vector<ProjectiveShape> shapes2 =
      shapes_from_group(dataset, dataset.group(names[1]), parse_frame(opt.frame));
  std::cout << two_sample_hotelling(assemble_sample(shapes1), assemble_sample(shapes2)).summary()
            << "\n";
  return 0;
}

int run_rotcmp(const CommonOptions& opt, double scale) {
  const LandmarkDataset dataset = load_dataset(opt);
  const auto names = pick_groups(dataset, opt.groups, 2);
  const std::vector<ProjectiveShape> shapes1 =
      shapes_from_group(dataset, dataset.group(names[0]), parse_frame(opt.frame));
  const std::vector<ProjectiveShape> shapes2 =
      shapes_from_group(dataset, dataset.group(names[1]), parse_frame(opt.frame));
  const AxisComparison cmp =
      two_sample_axis_test(shapes1, shapes2, opt.b, opt.seed, opt.alpha, scale);
  std::cout << "H(r) = [" << fmt(cmp.h.h[0]) << " : " << fmt(cmp.h.h[1]) << " : "
            << fmt(cmp.h.h[2]) << " : " << fmt(cmp.h.h[3]) << "]\n";
  std::cout << "G(r) = (" << fmt(cmp.g.g[0]) << ", " << fmt(cmp.g.g[1]) << ", "
            << fmt(cmp.g.g[2]) << ")\n";
  for (int c = 0; c < 3; ++c)
    std::cout << "interval " << c + 1 << ": [" << fmt(cmp.intervals[c][0], 2) << ", "
              << fmt(cmp.intervals[c][1], 2) << "]\n";
  std::cout << cmp.report.summary() << "\n";
  const std::string label = fmt(cmp.scale, 0) + "G";
  emit(opt, "rotcmp_cloud.csv", scatter_csv(cmp.cloud));
  emit(opt, "rotcmp_cloud.svg", scatter_svg(cmp.cloud, label));
  return 0;
}

int run_calibrate(const CommonOptions& opt, const std::string& scenario, int n, int reps,
                  double kappa) {
  const CalibrationReport report = calibration_harness(scenario, n, reps, opt.seed, kappa);
  std::cout << report.to_text();
  emit(opt, "calibration.csv", report.to_csv());
  return 0;
}

int run_reproduce(const CommonOptions& opt, const std::string& id) {
  const ReproduceResult result = reproduce_case(id, opt.b, opt.seed);
  std::cout << result.report;
  for (const auto& [name, content] : result.artifacts) emit(opt, name, content);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"statistical analysis of projective shapes of landmark configurations"};
  app.require_subcommand(1);

  CommonOptions opt;
  opt.seed = default_seed();

  const auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("--input", opt.input, "dataset path or bundled fixture id")->required();
    cmd->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--frame", opt.frame, "1-based frame landmark indices, comma separated");
    cmd->add_option("--groups", opt.groups, "group names, comma separated");
    cmd->add_option("--alpha", opt.alpha, "significance level")->check(CLI::Range(1e-6, 1.0));
    cmd->add_option("--B", opt.b, "bootstrap resamples");
    cmd->add_option("--seed", opt.seed, "RNG seed (default: PROJSHAPE_SEED or 12345)");
    cmd->add_option("--out", opt.out_dir, "directory for emitted artifacts");
  };

  auto* cmd_register = app.add_subcommand("register", "register configurations into axial coordinates");
  add_common(cmd_register, true);

  auto* cmd_mean = app.add_subcommand("mean", "extrinsic means and mean directions per group");
  add_common(cmd_mean, true);

  std::string mu0_text;
  double theta0 = 0.0;
  auto* cmd_test1 = app.add_subcommand("test1", "one-sample tests against a hypothesized mean");
  add_common(cmd_test1, true);
  cmd_test1->add_option("--mu0", mu0_text, "hypothesized mean axes 'z1,z2,z3[;z1,z2,z3...]'");
  auto* theta0_option = cmd_test1->add_option("--theta0", theta0, "hypothesized direction (m=1)");

  auto* cmd_test2 = app.add_subcommand("test2", "two-sample tangent Hotelling test");
  add_common(cmd_test2, true);

  double scale = 0.0;
  auto* cmd_rotcmp = app.add_subcommand("rotcmp", "two-sample extrinsic axis comparison (m=2)");
  add_common(cmd_rotcmp, true);
  cmd_rotcmp->add_option("--scale", scale, "cloud scale factor (default sqrt(n1+n2))");

  std::string scenario = "extrinsic-m1";
  int calib_n = 50;
  int calib_reps = 2000;
  double kappa = 0.0;
  auto* cmd_calibrate = app.add_subcommand("calibrate", "Monte Carlo calibration of the test statistics");
  add_common(cmd_calibrate, false);
  cmd_calibrate->add_option("--scenario", scenario,
                            "extrinsic-m1 | tangent-m2q2 | directional-m2q1");
  cmd_calibrate->add_option("--n", calib_n, "sample size per replication");
  cmd_calibrate->add_option("--reps", calib_reps, "number of replications");
  cmd_calibrate->add_option("--kappa", kappa, "concentration (0 = scenario default)");

  std::string case_id;
  auto* cmd_reproduce = app.add_subcommand("reproduce", "run a bundled case study");
  add_common(cmd_reproduce, false);
  cmd_reproduce->add_option("case", case_id, "ex5.1 | ex5.2 | ex5.3")->required();
  cmd_reproduce->get_option("--B")->default_val(0);
  opt.b = 0;

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_register->parsed()) return run_register(opt);
    if (cmd_mean->parsed()) return run_mean(opt);
    if (cmd_test1->parsed()) return run_test1(opt, mu0_text, theta0, theta0_option->count() > 0);
    if (cmd_test2->parsed()) return run_test2(opt);
    if (cmd_rotcmp->parsed()) return run_rotcmp(opt, scale);
    if (cmd_calibrate->parsed()) return run_calibrate(opt, scenario, calib_n, calib_reps, kappa);
    if (cmd_reproduce->parsed()) return run_reproduce(opt, case_id);
  } catch (const projshape::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(projshape::ErrorCode::internal);
  }
  return 0;
}
