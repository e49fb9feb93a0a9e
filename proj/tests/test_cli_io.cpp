#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>

#include "projshape/dataset.hpp"
#include "projshape/errors.hpp"
#include "projshape/fixtures.hpp"
#include "projshape/reproduce.hpp"
#include "projshape/rng.hpp"
#include "projshape/scatter.hpp"

using namespace projshape;

TEST_CASE("bundled fixtures have the documented shapes") {
  const LandmarkDataset t1 = fixture_dataset("table1");
  CHECK(t1.m == 1);
  CHECK(t1.k == 4);
  CHECK_FALSE(t1.pre_registered);
  REQUIRE(t1.groups.size() == 1);
  CHECK(t1.groups[0].views.size() == 5);
  CHECK(t1.groups[0].views[0].landmarks.size() == 4);

  const LandmarkDataset t3 = fixture_dataset("table3");
  CHECK(t3.m == 2);
  CHECK(t3.k == 6);
  CHECK(t3.pre_registered);
  REQUIRE(t3.groups.size() == 2);
  CHECK(t3.group("frontal").views.size() == 7);
  CHECK(t3.group("side").views.size() == 7);
  CHECK(t3.group("frontal").views[0].landmarks.size() == 2);  // q = k - m - 2

  CHECK(fixture_dataset("ex5.2").name == fixture_dataset("table2").name);
  CHECK_THROWS_AS(fixture_dataset("table9"), ArgumentError);
}

TEST_CASE("csv round trip is value-exact") {
  LandmarkDataset d;
  d.name = "trip";
  d.m = 2;
  d.provenance = "synthetic";
  LandmarkGroup g;
  g.name = "only";
  RngStream rng(55);
  for (int v = 0; v < 3; ++v) {
    LandmarkView view;
    view.id = std::to_string(v + 1);
    for (int l = 0; l < 5; ++l) {
      Eigen::VectorXd point(2);
      point << rng.next_normal() / 3.0, rng.next_normal() * 1e-7 + 1.0 / 3.0;
      view.landmarks.push_back(point);
    }
    g.views.push_back(view);
  }
  d.groups.push_back(g);
  d.k = 5;

  const std::string csv = serialize_dataset(d, DatasetFormat::csv);
  const LandmarkDataset back = parse_dataset_text(csv, DatasetFormat::csv);
  CHECK(dataset_equal(d, back));

  const std::string json = serialize_dataset(d, DatasetFormat::json);
  const LandmarkDataset back_json = parse_dataset_text(json, DatasetFormat::json);
  CHECK(dataset_equal(d, back_json));
}

TEST_CASE("fixture datasets survive serialization in both formats") {
  for (const std::string& id : fixture_ids()) {
    const LandmarkDataset d = fixture_dataset(id);
    CHECK(dataset_equal(
        d, parse_dataset_text(serialize_dataset(d, DatasetFormat::csv), DatasetFormat::csv)));
    CHECK(dataset_equal(
        d, parse_dataset_text(serialize_dataset(d, DatasetFormat::json), DatasetFormat::json)));
  }
}

TEST_CASE("csv parser rejects malformed input with positions") {
  CHECK_THROWS_AS(parse_dataset_text("", DatasetFormat::csv), ParseError);
  CHECK_THROWS_AS(parse_dataset_text("a,b,c\n", DatasetFormat::csv), ParseError);

  const std::string good_header = "group,view,landmark,x1\n";
  CHECK_THROWS_AS(parse_dataset_text(good_header, DatasetFormat::csv), ValidationError);

  // bad number carries the line number
  try {
    parse_dataset_text(good_header + "g,1,1,abc\n", DatasetFormat::csv);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  // duplicate landmark index
  CHECK_THROWS_AS(
      parse_dataset_text(good_header + "g,1,1,0.5\ng,1,1,0.7\n", DatasetFormat::csv),
      ParseError);

  // inconsistent landmark count across views
  CHECK_THROWS_AS(parse_dataset_text(good_header + "g,1,1,0.5\ng,1,2,0.7\ng,2,1,0.5\n",
                                     DatasetFormat::csv),
                  ValidationError);

  // non-contiguous landmark indices
  CHECK_THROWS_AS(
      parse_dataset_text(good_header + "g,1,1,0.5\ng,1,3,0.7\n", DatasetFormat::csv),
      ValidationError);

  CHECK_THROWS_AS(parse_dataset_text("{not json", DatasetFormat::json), ParseError);
  CHECK_THROWS_AS(parse_dataset_text("{\"groups\": 3}", DatasetFormat::json), ParseError);
}

TEST_CASE("shapes_from_group registers raw data and wraps registered data") {
  const LandmarkDataset t1 = fixture_dataset("table1");
  const auto shapes = shapes_from_group(t1, t1.groups[0]);
  CHECK(shapes.size() == 5);
  CHECK(shapes[0].q() == 1);

  const LandmarkDataset t2 = fixture_dataset("table2");
  const auto education = shapes_from_group(t2, t2.group("education"));
  CHECK(education.size() == 5);
  CHECK(education[0].m == 2);
  CHECK_THROWS_AS(
      shapes_from_group(t2, t2.group("education"), std::vector<int>{0, 1, 2, 3}),
      ArgumentError);
}

TEST_CASE("scatter emission") {
  const std::vector<Eigen::Vector3d> origin = {Eigen::Vector3d::Zero()};
  const std::string csv = scatter_csv(origin);
  CHECK(csv == "g1,g2,g3\n0,0,0\n");

  const std::string svg = scatter_svg(origin, "3G");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("3G1") != std::string::npos);
  CHECK(svg.find("3G2") != std::string::npos);
  CHECK(svg.find("3G3") != std::string::npos);
  CHECK(svg.find("circle") != std::string::npos);

  // 10^4 points under a second
  RngStream rng(66);
  std::vector<Eigen::Vector3d> cloud;
  for (int i = 0; i < 10000; ++i)
    cloud.emplace_back(rng.next_normal(), rng.next_normal(), rng.next_normal());
  const auto start = std::chrono::steady_clock::now();
  const std::string big_csv = scatter_csv(cloud);
  const std::string big_svg = scatter_svg(cloud, "G");
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(elapsed < 1.0);
  CHECK(big_svg.size() > 10000);
  CHECK(big_csv.size() > 10000);
}

TEST_CASE("reproduce output is deterministic for a fixed seed") {
  const ReproduceResult a = reproduce_case("ex5.1", 400, 99);
  const ReproduceResult b = reproduce_case("ex5.1", 400, 99);
  CHECK(a.report == b.report);

  const ReproduceResult c = reproduce_case("ex5.2", 60, 99);
  const ReproduceResult d = reproduce_case("ex5.2", 60, 99);
  CHECK(c.report == d.report);
  REQUIRE(c.artifacts.count("ex5.2_cloud.csv") == 1);
  CHECK(c.artifacts.at("ex5.2_cloud.csv") == d.artifacts.at("ex5.2_cloud.csv"));
  CHECK(c.artifacts.at("ex5.2_cloud.svg") == d.artifacts.at("ex5.2_cloud.svg"));

  const ReproduceResult e = reproduce_case("ex5.3", 80, 99);
  const ReproduceResult f = reproduce_case("ex5.3", 80, 99);
  CHECK(e.report == f.report);

  CHECK_THROWS_AS(reproduce_case("ex9.9", 10, 1), ArgumentError);
}

TEST_CASE("reproduce reports carry the key quantities") {
  const ReproduceResult r1 = reproduce_case("ex5.1", 200, 3);
  CHECK(r1.report.find("theta0") != std::string::npos);
  CHECK(r1.report.find("Watson-Williams") != std::string::npos);
  CHECK(r1.report.find("bootstrap") != std::string::npos);

  const ReproduceResult r2 = reproduce_case("ex5.2", 60, 3);
  CHECK(r2.report.find("extrinsic mean, education") != std::string::npos);
  CHECK(r2.report.find("H(r)") != std::string::npos);
  CHECK(r2.report.find("invariants") != std::string::npos);

  const ReproduceResult r3 = reproduce_case("ex5.3", 80, 3);
  CHECK(r3.report.find("combined mean direction") != std::string::npos);
  CHECK(r3.report.find("threshold") != std::string::npos);
}
