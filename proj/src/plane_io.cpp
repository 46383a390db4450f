#include <fstream>
#include <json.hpp>
#include <ostream>

#include "ppc/errors.hpp"
#include "ppc/plane.hpp"

namespace ppc {

using nlohmann::json;

void write_plane_json(const ProjectivePlane& plane, std::ostream& out) {
  out << "{\"order\": " << plane.order() << ",\n \"points\": [";
  for (std::size_t i = 0; i < plane.num_points(); ++i) out << (i ? ", " : "") << json(plane.labels()[i]).dump();
  out << "],\n \"lines\": [";
  for (std::size_t l = 0; l < plane.num_lines(); ++l) {
    out << (l ? ",\n  [" : "\n  [");
    const auto& pts = plane.line(static_cast<LineId>(l));
    for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? ", " : "") << pts[i];
    out << "]";
  }
  out << "\n ]}\n";
}

void save_plane(const ProjectivePlane& plane, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write plane file " + path.string());
  write_plane_json(plane, out);
  if (!out) throw IoError("failed writing plane file " + path.string());
}

LoadedPlane read_plane_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("plane JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("points") || !doc.contains("lines"))
    throw ParseError("plane JSON must be an object with order, points and lines");
  if (!doc["order"].is_number_unsigned()) throw ParseError("plane JSON: order must be a nonnegative integer");
  if (!doc["points"].is_array() || !doc["lines"].is_array())
    throw ParseError("plane JSON: points and lines must be arrays");

  std::vector<std::string> labels;
  for (const auto& item : doc["points"]) {
    if (!item.is_string()) throw ParseError("plane JSON: point labels must be strings");
    labels.push_back(item.get<std::string>());
  }
  std::vector<std::vector<PointId>> lines;
  for (const auto& line : doc["lines"]) {
    if (!line.is_array()) throw ParseError("plane JSON: each line must be an array of point indices");
    auto& pts = lines.emplace_back();
    for (const auto& p : line) {
      if (!p.is_number_unsigned() || p.get<std::uint64_t>() >= labels.size())
        throw ParseError("plane JSON: line " + std::to_string(lines.size() - 1) + " has an invalid point index " +
                         p.dump());
      pts.push_back(p.get<PointId>());
    }
  }
  LoadedPlane loaded{ProjectivePlane(doc["order"].get<std::uint32_t>(), std::move(labels), std::move(lines)), {}};
  loaded.report = validate_plane(loaded.plane);
  return loaded;
}

LoadedPlane load_plane(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open plane file " + path.string());
  return read_plane_json(in);
}

}  // namespace ppc
