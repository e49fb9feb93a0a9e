#include "projshape/fixtures.hpp"

#include "projshape/errors.hpp"

namespace projshape {

namespace {

LandmarkView make_view(const std::string& id, const std::vector<std::vector<double>>& rows) {
  LandmarkView view;
  view.id = id;
  for (const auto& row : rows) {
    Eigen::VectorXd v(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) v[i] = row[i];
    view.landmarks.push_back(std::move(v));
  }
  return view;
}

LandmarkDataset heyden_cross() {
  LandmarkDataset d;
  d.name = "paper-sheet-cross";
  d.m = 2;
  d.k = 5;
  d.provenance =
      "five points forming a cross on a rectangular sheet of paper, recorded in two camera "
      "views; the centre of image 1 is (344, 222): the published (344, 322) is a misprint, "
      "inconsistent with the published registration of this view and with the diagonal "
      "intersection of the four corners";
  LandmarkGroup g;
  g.name = "images";
  g.views.push_back(make_view("1", {{69, 53}, {591, 33}, {626, 402}, {69, 430}, {344, 222}}));
  g.views.push_back(make_view("2", {{334, 69}, {732, 290}, {428, 504}, {43, 200}, {373, 243}}));
  d.groups.push_back(std::move(g));
  return d;
}

LandmarkDataset education_windows() {
  LandmarkDataset d;
  d.name = "education-windows";
  d.m = 1;
  d.k = 4;
  d.provenance =
      "horizontal coordinates of four collinear window centres on the Education Building, "
      "five photographic views";
  LandmarkGroup g;
  g.name = "education";
  g.views.push_back(make_view("1", {{22.90}, {35.7}, {48.3}, {61.10}}));
  g.views.push_back(make_view("2", {{23.10}, {29.1}, {35.5}, {42.50}}));
  g.views.push_back(make_view("3", {{41.40}, {44.3}, {47.3}, {50.70}}));
  g.views.push_back(make_view("4", {{39.00}, {47.0}, {53.9}, {60.00}}));
  g.views.push_back(make_view("5", {{42.25}, {46.9}, {50.5}, {53.85}}));
  d.groups.push_back(std::move(g));
  return d;
}

LandmarkDataset buildings() {
  LandmarkDataset d;
  d.name = "buildings";
  d.m = 2;
  d.k = 5;
  d.pre_registered = true;
  d.provenance =
      "spherical projective coordinates of five identically positioned landmarks on the "
      "Education Building (five views) and the Careers Building (four views)";
  LandmarkGroup education;
  education.name = "education";
  education.views.push_back(make_view("1", {{0.8142, 0.5547, 0.1718}}));
  education.views.push_back(make_view("2", {{0.8038, 0.5610, 0.1977}}));
  education.views.push_back(make_view("3", {{0.8067, 0.5591, 0.1917}}));
  education.views.push_back(make_view("4", {{0.8150, 0.5513, 0.1787}}));
  education.views.push_back(make_view("5", {{0.7773, 0.5890, 0.2211}}));
  d.groups.push_back(std::move(education));
  LandmarkGroup careers;
  careers.name = "careers";
  careers.views.push_back(make_view("1", {{0.7859, 0.5768, 0.2228}}));
  careers.views.push_back(make_view("2", {{0.8170, 0.5712, 0.0791}}));
  careers.views.push_back(make_view("3", {{0.7639, 0.6041, 0.2268}}));
  careers.views.push_back(make_view("4", {{0.7893, 0.5766, 0.2110}}));
  d.groups.push_back(std::move(careers));
  return d;
}

LandmarkDataset faces() {
  LandmarkDataset d;
  d.name = "faces";
  d.m = 2;
  d.k = 6;
  d.pre_registered = true;
  d.provenance =
      "bivariate spherical projective coordinates of six face landmarks (four eye corners as "
      "the frame, two mouth edge points registered), seven frontal and seven side views of "
      "one actor";
  LandmarkGroup frontal;
  frontal.name = "frontal";
  frontal.views.push_back(make_view("1", {{0.700780, 0.657783, 0.276096},
                                          {0.708981, 0.676761, 0.198344}}));
  frontal.views.push_back(make_view("2", {{0.685337, 0.675546, 0.271939},
                                          {0.697420, 0.691293, 0.188996}}));
  frontal.views.push_back(make_view("3", {{0.688405, 0.650635, 0.320581},
                                          {0.709839, 0.669692, 0.218266}}));
  frontal.views.push_back(make_view("4", {{0.690658, 0.673332, 0.263846},
                                          {0.706231, 0.681266, 0.192651}}));
  frontal.views.push_back(make_view("5", {{0.691832, 0.668204, 0.273626},
                                          {0.700515, 0.685421, 0.198688}}));
  frontal.views.push_back(make_view("6", {{0.688246, 0.667378, 0.284470},
                                          {0.703869, 0.680057, 0.205158}}));
  frontal.views.push_back(make_view("7", {{0.681884, 0.685515, 0.255155},
                                          {0.692303, 0.697768, 0.183948}}));
  d.groups.push_back(std::move(frontal));
  LandmarkGroup side;
  side.name = "side";
  side.views.push_back(make_view("8", {{0.679369, 0.669555, 0.300255},
                                       {0.694591, 0.683580, 0.224191}}));
  side.views.push_back(make_view("9", {{0.686636, 0.687718, 0.235742},
                                       {0.698689, 0.696648, 0.162835}}));
  side.views.push_back(make_view("10", {{0.684002, 0.685272, 0.250087},
                                        {0.694651, 0.701190, 0.160603}}));
  side.views.push_back(make_view("11", {{0.667353, 0.699274, 0.256235},
                                        {0.679292, 0.713641, 0.171112}}));
  side.views.push_back(make_view("12", {{0.717523, 0.665701, 0.204944},
                                        {0.726679, 0.673698, 0.134419}}));
  side.views.push_back(make_view("13", {{0.694639, 0.669937, 0.262035},
                                        {0.705996, 0.686475, 0.174132}}));
  side.views.push_back(make_view("14", {{0.723910, 0.649280, 0.233215},
                                        {0.735734, 0.656621, 0.165965}}));
  d.groups.push_back(std::move(side));
  return d;
}

}  // namespace

LandmarkDataset fixture_dataset(const std::string& id) {
  if (id == "ex2.1" || id == "paper-sheet-cross") return heyden_cross();
  if (id == "table1" || id == "ex5.1" || id == "education-windows") return education_windows();
  if (id == "table2" || id == "ex5.2" || id == "buildings") return buildings();
  if (id == "table3" || id == "ex5.3" || id == "faces") return faces();
  throw ArgumentError("unknown fixture '" + id + "'");
}

std::vector<std::string> fixture_ids() {
  return {"ex2.1", "table1", "table2", "table3"};
}

}  // namespace projshape
