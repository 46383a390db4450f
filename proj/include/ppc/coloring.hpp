#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "ppc/plane.hpp"
#include "ppc/rng.hpp"
#include "ppc/types.hpp"

namespace ppc {

/**
 * Assignment of colors 1..d to plane points, with kUncolored marking
 * points that carry no color yet.
 */
class PartialColoring {
 public:
  PartialColoring() = default;
  /// All `num_points` points uncolored.
  PartialColoring(std::uint32_t colors, std::size_t num_points);
  /// Throws std::invalid_argument if any entry exceeds `colors` or colors == 0.
  PartialColoring(std::uint32_t colors, std::vector<Color> assignment);

  std::uint32_t colors() const noexcept { return colors_; }
  std::size_t size() const noexcept { return assignment_.size(); }
  Color operator[](PointId p) const { return assignment_[p]; }
  const std::vector<Color>& assignment() const noexcept { return assignment_; }

  void set(PointId p, Color c);
  void clear(PointId p) { set(p, kUncolored); }

  bool is_total() const;
  std::vector<PointId> uncolored() const;

  bool operator==(const PartialColoring&) const = default;

 private:
  std::uint32_t colors_ = 0;
  std::vector<Color> assignment_;
};

/// Per-color point counts of one line; uncolored points contribute nothing.
struct LineType {
  std::vector<std::uint32_t> counts;
  std::uint32_t colored_total = 0;

  bool operator==(const LineType& other) const { return counts == other.counts; }
};

using LinePair = std::pair<LineId, LineId>;

LineType line_type(const ProjectivePlane& plane, const PartialColoring& coloring, LineId line);

/// Sum of coordinate differences. Throws std::invalid_argument on dimension mismatch.
std::uint64_t l1_distance(const LineType& t1, const LineType& t2);

/// Unordered pairs (i < j, sorted) of lines with equal types. The coloring must be total.
std::vector<LinePair> find_bad_pairs(const ProjectivePlane& plane, const PartialColoring& coloring);

inline bool is_legitimate(const ProjectivePlane& plane, const PartialColoring& coloring) {
  return find_bad_pairs(plane, coloring).empty();
}

/// 22 ln n: the largest L1 type distance at which a pair still counts as dangerous.
double dangerous_threshold(std::uint32_t order);

/// Pairs whose type distance is at most dangerous_threshold(order), ties included.
std::vector<LinePair> find_dangerous_pairs(const ProjectivePlane& plane, const PartialColoring& partial);
/// Same scan with an explicit threshold.
std::vector<LinePair> find_dangerous_pairs(const ProjectivePlane& plane, const PartialColoring& partial,
                                           double threshold);

/**
 * Point set meeting every line between ln n and 11 ln n times.
 * The bounds are enforced by `make`.
 */
class SSet {
 public:
  /// Throws std::invalid_argument on out-of-range ids, n < 2 or a line outside the window.
  static SSet make(const ProjectivePlane& plane, std::vector<PointId> members);

  const std::vector<PointId>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(PointId p) const { return p < is_member_.size() && is_member_[p]; }
  std::uint32_t line_count(LineId l) const { return per_line_.at(l); }
  const std::vector<std::uint32_t>& per_line_counts() const noexcept { return per_line_; }

 private:
  std::vector<PointId> members_;
  std::vector<bool> is_member_;
  std::vector<std::uint32_t> per_line_;
};

/// Lower and upper per-line bounds (ln n, 11 ln n).
std::pair<double, double> sset_window(std::uint32_t order);
/// Size bound (n^2+n+1) 11 ln n / (n+1); informational, exceeds |P| for small n.
double sset_size_bound(std::uint32_t order);
/// min(1, 6 ln n / (n+1)).
double default_inclusion_prob(std::uint32_t order);

struct SampleSResult {
  SSet set;
  std::size_t attempts = 0;
  double size_bound = 0.0;
};

/**
 * Randomized search for an S-set: every point joins independently with
 * `inclusion_prob`; retried until the per-line window holds.
 * Throws Infeasible after `max_attempts`, std::invalid_argument for n < 2
 * or inclusion_prob outside [0, 1].
 */
SampleSResult sample_S(const ProjectivePlane& plane, Rng& rng, double inclusion_prob, std::size_t max_attempts);

/// Uniform i.i.d. colors on P \ S; S left uncolored.
PartialColoring sample_partial(const ProjectivePlane& plane, const std::vector<PointId>& s_members,
                               std::uint32_t colors, Rng& rng);

struct Fact2Report {
  bool pass = false;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::size_t dangerous_pairs = 0;
  /// Line with the most dangerous partners, and that count.
  std::optional<LineId> worst_line;
  std::size_t worst_line_degree = 0;
  /// S-point on the most lines that take part in dangerous pairs, and that count.
  std::optional<PointId> worst_point;
  std::size_t worst_point_lines = 0;
  /// Largest number of dangerous pairs with a line through one S-point, against a*b.
  std::size_t max_pairs_per_point = 0;
  bool pairs_per_point_ok = true;
};

/**
 * Checks the two degree caps on a partial coloring that leaves exactly S
 * uncolored: no line in more than `a` dangerous pairs, no S-point on more
 * than `b` lines involved in dangerous pairs. Throws std::invalid_argument
 * when the uncolored set differs from S.
 */
Fact2Report fact2_check(const ProjectivePlane& plane, const PartialColoring& partial, const SSet& s, std::uint32_t a,
                        std::uint32_t b);

// JSON interchange ({"d": d, "assignment": [...]} and {"members": [...]}).
void write_coloring_json(const PartialColoring& coloring, std::ostream& out);
void save_coloring(const PartialColoring& coloring, const std::filesystem::path& path);
PartialColoring read_coloring_json(std::istream& in);
PartialColoring load_coloring(const std::filesystem::path& path);

void write_sset_json(const std::vector<PointId>& members, std::ostream& out);
void save_sset(const std::vector<PointId>& members, const std::filesystem::path& path);
std::vector<PointId> read_sset_json(std::istream& in);
std::vector<PointId> load_sset(const std::filesystem::path& path);

}  // namespace ppc
