#include <fstream>
#include <json.hpp>
#include <ostream>

#include "ppc/coloring.hpp"
#include "ppc/errors.hpp"

namespace ppc {

using nlohmann::json;

namespace {

json parse_document(std::istream& in, const char* what) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + " JSON: " + e.what());
  }
}

}  // namespace

void write_coloring_json(const PartialColoring& coloring, std::ostream& out) {
  out << "{\"d\": " << coloring.colors() << ", \"assignment\": [";
  for (std::size_t p = 0; p < coloring.size(); ++p) {
    if (p) out << ", ";
    const Color c = coloring[static_cast<PointId>(p)];
    if (c == kUncolored)
      out << "null";
    else
      out << c;
  }
  out << "]}\n";
}

void save_coloring(const PartialColoring& coloring, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write coloring file " + path.string());
  write_coloring_json(coloring, out);
}

PartialColoring read_coloring_json(std::istream& in) {
  const json doc = parse_document(in, "coloring");
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("assignment") || !doc["assignment"].is_array())
    throw ParseError("coloring JSON must be an object with d and an assignment array");
  if (!doc["d"].is_number_unsigned() || doc["d"].get<std::uint64_t>() == 0 || doc["d"].get<std::uint64_t>() > 65535)
    throw ParseError("coloring JSON: d must be an integer in 1..65535");
  const auto d = doc["d"].get<std::uint32_t>();
  std::vector<Color> assignment;
  for (const auto& item : doc["assignment"]) {
    if (item.is_null()) {
      assignment.push_back(kUncolored);
    } else if (item.is_number_unsigned() && item.get<std::uint64_t>() >= 1 && item.get<std::uint64_t>() <= d) {
      assignment.push_back(item.get<Color>());
    } else {
      throw ParseError("coloring JSON: entry " + std::to_string(assignment.size()) + " must be null or a color in 1.." +
                       std::to_string(d));
    }
  }
  return PartialColoring(d, std::move(assignment));
}

PartialColoring load_coloring(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open coloring file " + path.string());
  return read_coloring_json(in);
}

void write_sset_json(const std::vector<PointId>& members, std::ostream& out) {
  out << "{\"members\": [";
  for (std::size_t i = 0; i < members.size(); ++i) out << (i ? ", " : "") << members[i];
  out << "]}\n";
}

void save_sset(const std::vector<PointId>& members, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write S-set file " + path.string());
  write_sset_json(members, out);
}

std::vector<PointId> read_sset_json(std::istream& in) {
  const json doc = parse_document(in, "S-set");
  if (!doc.is_object() || !doc.contains("members") || !doc["members"].is_array())
    throw ParseError("S-set JSON must be an object with a members array");
  std::vector<PointId> members;
  for (const auto& item : doc["members"]) {
    if (!item.is_number_unsigned()) throw ParseError("S-set JSON: members must be point indices");
    members.push_back(item.get<PointId>());
  }
  return members;
}

std::vector<PointId> load_sset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open S-set file " + path.string());
  return read_sset_json(in);
}

}  // namespace ppc
