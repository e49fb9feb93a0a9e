#include "projshape/scatter.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "projshape/errors.hpp"

namespace projshape {

namespace {

std::string shortest(double v) {
  char buf[40];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

}  // namespace

std::string scatter_csv(const std::vector<Eigen::Vector3d>& points) {
  if (points.empty()) throw ArgumentError("scatter_csv: empty cloud");
  std::ostringstream out;
  out << "g1,g2,g3\n";
  for (const auto& p : points)
    out << shortest(p.x()) << "," << shortest(p.y()) << "," << shortest(p.z()) << "\n";
  return out.str();
}

std::string scatter_svg(const std::vector<Eigen::Vector3d>& points,
                        const std::string& axis_prefix) {
  if (points.empty()) throw ArgumentError("scatter_svg: empty cloud");

  constexpr int panel = 260;
  constexpr int margin = 40;
  constexpr int gap = 30;
  const int width = 3 * panel + 2 * gap + 2 * margin;
  const int height = panel + 2 * margin;

  // Panels: (g1,g2), (g1,g3), (g2,g3)
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};

  double lo = points[0][0], hi = points[0][0];
  for (const auto& p : points)
    for (int c = 0; c < 3; ++c) {
      lo = std::min(lo, p[c]);
      hi = std::max(hi, p[c]);
    }
  lo = std::min(lo, 0.0);
  hi = std::max(hi, 0.0);
  const double span = std::max(hi - lo, 1e-9);
  const double pad = 0.05 * span;
  lo -= pad;
  hi += pad;

  const auto to_pixel = [&](double v, int origin, bool flip) {
    const double t = (v - lo) / (hi - lo);
    return origin + (flip ? (1.0 - t) : t) * panel;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  for (int panel_index = 0; panel_index < 3; ++panel_index) {
    const int x0 = margin + panel_index * (panel + gap);
    const int y0 = margin;
    const int ax = pairs[panel_index][0];
    const int ay = pairs[panel_index][1];

    svg << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << panel << "\" height=\""
        << panel << "\" fill=\"none\" stroke=\"black\"/>\n";
    // zero cross-hairs
    const double zx = to_pixel(0.0, x0, false);
    const double zy = to_pixel(0.0, y0, true);
    svg << "<line x1=\"" << zx << "\" y1=\"" << y0 << "\" x2=\"" << zx << "\" y2=\""
        << y0 + panel << "\" stroke=\"#bbbbbb\"/>\n";
    svg << "<line x1=\"" << x0 << "\" y1=\"" << zy << "\" x2=\"" << x0 + panel << "\" y2=\""
        << zy << "\" stroke=\"#bbbbbb\"/>\n";

    char label[64];
    std::snprintf(label, sizeof(label), "%s%d", axis_prefix.c_str(), ax + 1);
    svg << "<text x=\"" << x0 + panel / 2 << "\" y=\"" << y0 + panel + 24
        << "\" text-anchor=\"middle\" font-size=\"13\">" << label << "</text>\n";
    std::snprintf(label, sizeof(label), "%s%d", axis_prefix.c_str(), ay + 1);
    svg << "<text x=\"" << x0 - 10 << "\" y=\"" << y0 + panel / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 " << x0 - 10 << " "
        << y0 + panel / 2 << ")\">" << label << "</text>\n";

    for (const auto& p : points) {
      svg << "<circle cx=\"" << to_pixel(p[ax], x0, false) << "\" cy=\""
          << to_pixel(p[ay], y0, true) << "\" r=\"1.8\" fill=\"black\" fill-opacity=\"0.6\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("short write to '" + path + "'");
}

}  // namespace projshape
