#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ppc/galois_field.hpp"
#include "ppc/types.hpp"

namespace ppc {

/// One failed incidence axiom, with the ids it concerns.
struct AxiomViolation {
  std::string axiom;
  std::vector<std::uint32_t> ids;
  std::string detail;
};

struct ValidationReport {
  bool pass = true;
  /// Total number of violations found; `violations` keeps at most a bounded sample per axiom.
  std::size_t violation_count = 0;
  std::vector<AxiomViolation> violations;

  bool has(const std::string& axiom) const;
};

/**
 * Incidence structure with dense point and line ids.
 *
 * A ProjectivePlane can hold arbitrary (possibly defective) incidence data
 * so that loaded files can be inspected; use validate_plane to check the
 * axioms. Lines are stored sorted ascending.
 */
class ProjectivePlane {
 public:
  ProjectivePlane() = default;

  /// Throws std::invalid_argument when a line references a point id >= labels.size().
  ProjectivePlane(std::uint32_t order, std::vector<std::string> point_labels, std::vector<std::vector<PointId>> lines);

  std::uint32_t order() const noexcept { return order_; }
  std::size_t num_points() const noexcept { return labels_.size(); }
  std::size_t num_lines() const noexcept { return lines_.size(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<PointId>>& lines() const noexcept { return lines_; }
  const std::vector<PointId>& line(LineId id) const { return lines_.at(id); }
  const std::vector<LineId>& lines_through(PointId p) const { return point_to_lines_.at(p); }

  bool contains(LineId line, PointId point) const;

  /// The structure with the roles of points and lines exchanged.
  ProjectivePlane dual() const;

  bool operator==(const ProjectivePlane& other) const {
    return order_ == other.order_ && labels_ == other.labels_ && lines_ == other.lines_;
  }

 private:
  std::uint32_t order_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<PointId>> lines_;
  std::vector<std::vector<LineId>> point_to_lines_;
};

/// PG(2,q) from homogeneous coordinates over `field`.
ProjectivePlane build_pg2(const GaloisField& field);

/// Convenience overload; throws std::invalid_argument when q is not a prime power.
ProjectivePlane build_pg2(std::uint32_t q);

ValidationReport validate_plane(const ProjectivePlane& plane);

struct LoadedPlane {
  ProjectivePlane plane;
  ValidationReport report;
};

void write_plane_json(const ProjectivePlane& plane, std::ostream& out);
void save_plane(const ProjectivePlane& plane, const std::filesystem::path& path);

/// Parses the plane JSON format; throws ParseError on malformed input.
LoadedPlane read_plane_json(std::istream& in);
/// Throws IoError when the file cannot be opened.
LoadedPlane load_plane(const std::filesystem::path& path);

}  // namespace ppc
