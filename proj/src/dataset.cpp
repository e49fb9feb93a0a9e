#include "projshape/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "projshape/errors.hpp"

namespace projshape {

namespace {

std::string format_shortest(double v) {
  char buf[40];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

double parse_double(const std::string& token, int line_number) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end)
    throw ParseError("line " + std::to_string(line_number) + ": bad number '" + token + "'");
  return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(line);
  while (std::getline(in, token, ',')) {
    // trim surrounding blanks
    const auto first = token.find_first_not_of(" \t\r");
    const auto last = token.find_last_not_of(" \t\r");
    out.push_back(first == std::string::npos ? "" : token.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

void validate_dataset(LandmarkDataset& dataset) {
  if (dataset.groups.empty()) throw ValidationError("dataset has no groups");
  std::map<std::string, int> group_names;
  int landmark_count = -1;
  int coord_count = -1;
  for (const auto& group : dataset.groups) {
    if (++group_names[group.name] > 1)
      throw ValidationError("duplicate group name '" + group.name + "'");
    if (group.views.empty())
      throw ValidationError("group '" + group.name + "' has no views");
    for (const auto& view : group.views) {
      if (view.landmarks.empty())
        throw ValidationError("view '" + view.id + "' has no landmarks");
      if (landmark_count < 0) landmark_count = static_cast<int>(view.landmarks.size());
      if (static_cast<int>(view.landmarks.size()) != landmark_count)
        throw ValidationError("view '" + view.id + "' has " +
                              std::to_string(view.landmarks.size()) + " landmarks, expected " +
                              std::to_string(landmark_count));
      for (const auto& lm : view.landmarks) {
        if (coord_count < 0) coord_count = static_cast<int>(lm.size());
        if (static_cast<int>(lm.size()) != coord_count)
          throw ValidationError("inconsistent coordinate count in view '" + view.id + "'");
      }
    }
  }
  if (dataset.m == 0)
    dataset.m = dataset.pre_registered ? coord_count - 1 : coord_count;
  const int expected_coords = dataset.pre_registered ? dataset.m + 1 : dataset.m;
  if (coord_count != expected_coords)
    throw ValidationError("coordinate count " + std::to_string(coord_count) +
                          " does not match m = " + std::to_string(dataset.m));
  const int expected_k =
      dataset.pre_registered ? landmark_count + dataset.m + 2 : landmark_count;
  if (dataset.k == 0) dataset.k = expected_k;
  if (dataset.k != expected_k)
    throw ValidationError("k = " + std::to_string(dataset.k) + " does not match views with " +
                          std::to_string(landmark_count) + " rows");
}

LandmarkDataset parse_csv(const std::string& text) {
  LandmarkDataset dataset;
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  bool header_seen = false;
  int coord_count = 0;

  // (group, view) -> landmark index -> coords; insertion order preserved
  std::vector<std::string> group_order;
  std::map<std::string, std::vector<std::string>> view_order;
  std::map<std::string, std::map<std::string, std::map<int, Eigen::VectorXd>>> table;

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      std::string key = line.substr(1, colon - 1);
      std::string value = line.substr(colon + 1);
      const auto trim = [](std::string& s) {
        const auto first = s.find_first_not_of(" \t");
        const auto last = s.find_last_not_of(" \t");
        s = first == std::string::npos ? "" : s.substr(first, last - first + 1);
      };
      trim(key);
      trim(value);
      if (key == "name") dataset.name = value;
      else if (key == "m") dataset.m = static_cast<int>(parse_double(value, line_number));
      else if (key == "k") dataset.k = static_cast<int>(parse_double(value, line_number));
      else if (key == "pre_registered") dataset.pre_registered = (value == "true" || value == "1");
      else if (key == "provenance") dataset.provenance = value;
      continue;
    }
    const std::vector<std::string> tokens = split_csv_line(line);
    if (!header_seen) {
      if (tokens.size() < 4 || tokens[0] != "group" || tokens[1] != "view" ||
          tokens[2] != "landmark")
        throw ParseError("line " + std::to_string(line_number) +
                         ": expected header 'group,view,landmark,x1[,x2[,x3]]'");
      coord_count = static_cast<int>(tokens.size()) - 3;
      for (int c = 0; c < coord_count; ++c)
        if (tokens[3 + c] != "x" + std::to_string(c + 1))
          throw ParseError("line " + std::to_string(line_number) + ": bad coordinate column '" +
                           tokens[3 + c] + "'");
      header_seen = true;
      continue;
    }
    if (static_cast<int>(tokens.size()) != 3 + coord_count)
      throw ParseError("line " + std::to_string(line_number) + ": expected " +
                       std::to_string(3 + coord_count) + " fields, got " +
                       std::to_string(tokens.size()));
    const std::string& group = tokens[0];
    const std::string& view = tokens[1];
    const int landmark = static_cast<int>(parse_double(tokens[2], line_number));
    if (landmark < 1)
      throw ParseError("line " + std::to_string(line_number) + ": landmark index must be >= 1");
    Eigen::VectorXd coords(coord_count);
    for (int c = 0; c < coord_count; ++c) coords[c] = parse_double(tokens[3 + c], line_number);

    if (!table.count(group)) group_order.push_back(group);
    if (!table[group].count(view)) view_order[group].push_back(view);
    auto& slot = table[group][view];
    if (slot.count(landmark))
      throw ParseError("line " + std::to_string(line_number) + ": duplicate landmark " +
                       std::to_string(landmark) + " in view '" + view + "'");
    slot[landmark] = std::move(coords);
  }
  if (!header_seen) throw ParseError("empty dataset: no header row found");

  for (const auto& group_name : group_order) {
    LandmarkGroup group;
    group.name = group_name;
    for (const auto& view_name : view_order[group_name]) {
      LandmarkView view;
      view.id = view_name;
      const auto& slots = table[group_name][view_name];
      int expected = 1;
      for (const auto& [index, coords] : slots) {
        if (index != expected)
          throw ValidationError("view '" + view_name + "': landmark indices not contiguous at " +
                                std::to_string(index));
        view.landmarks.push_back(coords);
        ++expected;
      }
      group.views.push_back(std::move(view));
    }
    dataset.groups.push_back(std::move(group));
  }
  validate_dataset(dataset);
  return dataset;
}

LandmarkDataset parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
  LandmarkDataset dataset;
  try {
    dataset.name = j.value("name", "");
    dataset.m = j.value("m", 0);
    dataset.k = j.value("k", 0);
    dataset.pre_registered = j.value("pre_registered", false);
    dataset.provenance = j.value("provenance", "");
    for (const auto& jg : j.at("groups")) {
      LandmarkGroup group;
      group.name = jg.at("name").get<std::string>();
      for (const auto& jv : jg.at("views")) {
        LandmarkView view;
        view.id = jv.at("id").get<std::string>();
        for (const auto& jl : jv.at("landmarks")) {
          Eigen::VectorXd coords(jl.size());
          for (std::size_t c = 0; c < jl.size(); ++c) coords[c] = jl[c].get<double>();
          view.landmarks.push_back(std::move(coords));
        }
        group.views.push_back(std::move(view));
      }
      dataset.groups.push_back(std::move(group));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("JSON schema error: ") + e.what());
  }
  validate_dataset(dataset);
  return dataset;
}

}  // namespace

const LandmarkGroup& LandmarkDataset::group(const std::string& group_name) const {
  for (const auto& g : groups)
    if (g.name == group_name) return g;
  throw ArgumentError("dataset '" + name + "' has no group '" + group_name + "'");
}

LandmarkDataset parse_dataset_text(const std::string& text, DatasetFormat format) {
  return format == DatasetFormat::csv ? parse_csv(text) : parse_json(text);
}

LandmarkDataset parse_dataset(const std::string& path, DatasetFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dataset_text(buffer.str(), format);
}

std::string serialize_dataset(const LandmarkDataset& dataset, DatasetFormat format) {
  if (format == DatasetFormat::csv) {
    std::ostringstream out;
    out << "# name: " << dataset.name << "\n";
    out << "# m: " << dataset.m << "\n";
    out << "# k: " << dataset.k << "\n";
    out << "# pre_registered: " << (dataset.pre_registered ? "true" : "false") << "\n";
    if (!dataset.provenance.empty()) out << "# provenance: " << dataset.provenance << "\n";
    const int coords = dataset.pre_registered ? dataset.m + 1 : dataset.m;
    out << "group,view,landmark";
    for (int c = 0; c < coords; ++c) out << ",x" << c + 1;
    out << "\n";
    for (const auto& group : dataset.groups) {
      for (const auto& view : group.views) {
        for (std::size_t i = 0; i < view.landmarks.size(); ++i) {
          out << group.name << "," << view.id << "," << i + 1;
          for (int c = 0; c < view.landmarks[i].size(); ++c)
            out << "," << format_shortest(view.landmarks[i][c]);
          out << "\n";
        }
      }
    }
    return out.str();
  }

  nlohmann::ordered_json j;
  j["name"] = dataset.name;
  j["m"] = dataset.m;
  j["k"] = dataset.k;
  j["pre_registered"] = dataset.pre_registered;
  j["provenance"] = dataset.provenance;
  j["groups"] = nlohmann::ordered_json::array();
  for (const auto& group : dataset.groups) {
    nlohmann::ordered_json jg;
    jg["name"] = group.name;
    jg["views"] = nlohmann::ordered_json::array();
    for (const auto& view : group.views) {
      nlohmann::ordered_json jv;
      jv["id"] = view.id;
      jv["landmarks"] = nlohmann::ordered_json::array();
      for (const auto& lm : view.landmarks) {
        nlohmann::ordered_json jl = nlohmann::ordered_json::array();
        for (int c = 0; c < lm.size(); ++c) jl.push_back(lm[c]);
        jv["landmarks"].push_back(jl);
      }
      jg["views"].push_back(jv);
    }
    j["groups"].push_back(jg);
  }
  return j.dump(2) + "\n";
}

void write_dataset(const LandmarkDataset& dataset, const std::string& path,
                   DatasetFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << serialize_dataset(dataset, format);
}

bool dataset_equal(const LandmarkDataset& a, const LandmarkDataset& b) {
  if (a.name != b.name || a.m != b.m || a.k != b.k || a.pre_registered != b.pre_registered ||
      a.provenance != b.provenance || a.groups.size() != b.groups.size())
    return false;
  for (std::size_t g = 0; g < a.groups.size(); ++g) {
    if (a.groups[g].name != b.groups[g].name ||
        a.groups[g].views.size() != b.groups[g].views.size())
      return false;
    for (std::size_t v = 0; v < a.groups[g].views.size(); ++v) {
      const auto& va = a.groups[g].views[v];
      const auto& vb = b.groups[g].views[v];
      if (va.id != vb.id || va.landmarks.size() != vb.landmarks.size()) return false;
      for (std::size_t l = 0; l < va.landmarks.size(); ++l)
        if (va.landmarks[l] != vb.landmarks[l]) return false;
    }
  }
  return true;
}

std::vector<ProjectiveShape> shapes_from_group(const LandmarkDataset& dataset,
                                               const LandmarkGroup& group,
                                               std::optional<std::vector<int>> frame_indices) {
  std::vector<ProjectiveShape> shapes;
  shapes.reserve(group.views.size());
  for (const auto& view : group.views) {
    if (dataset.pre_registered) {
      if (frame_indices)
        throw ArgumentError("shapes_from_group: cannot re-frame pre-registered data");
      shapes.push_back(shape_from_axes(view.landmarks, dataset.k));
    } else {
      Configuration config;
      config.points = view.landmarks;
      shapes.push_back(register_configuration(config, frame_indices));
    }
  }
  return shapes;
}

}  // namespace projshape
