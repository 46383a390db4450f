#include "ppc/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ppc/errors.hpp"

namespace ppc {

PartialColoring::PartialColoring(std::uint32_t colors, std::size_t num_points)
    : colors_(colors), assignment_(num_points, kUncolored) {
  if (colors == 0) throw std::invalid_argument("a coloring needs at least one color");
}

PartialColoring::PartialColoring(std::uint32_t colors, std::vector<Color> assignment)
    : colors_(colors), assignment_(std::move(assignment)) {
  if (colors == 0) throw std::invalid_argument("a coloring needs at least one color");
  for (std::size_t p = 0; p < assignment_.size(); ++p)
    if (assignment_[p] > colors_)
      throw std::invalid_argument("point " + std::to_string(p) + " has color " + std::to_string(assignment_[p]) +
                                  " outside 1.." + std::to_string(colors_));
}

void PartialColoring::set(PointId p, Color c) {
  if (c > colors_) throw std::invalid_argument("color " + std::to_string(c) + " outside 1.." + std::to_string(colors_));
  assignment_.at(p) = c;
}

bool PartialColoring::is_total() const {
  return std::none_of(assignment_.begin(), assignment_.end(), [](Color c) { return c == kUncolored; });
}

std::vector<PointId> PartialColoring::uncolored() const {
  std::vector<PointId> out;
  for (PointId p = 0; p < assignment_.size(); ++p)
    if (assignment_[p] == kUncolored) out.push_back(p);
  return out;
}

LineType line_type(const ProjectivePlane& plane, const PartialColoring& coloring, LineId line) {
  LineType t;
  t.counts.assign(coloring.colors(), 0);
  for (PointId p : plane.line(line)) {
    const Color c = coloring[p];
    if (c == kUncolored) continue;
    ++t.counts[c - 1];
    ++t.colored_total;
  }
  return t;
}

std::uint64_t l1_distance(const LineType& t1, const LineType& t2) {
  if (t1.counts.size() != t2.counts.size())
    throw std::invalid_argument("line types of different dimension (" + std::to_string(t1.counts.size()) + " vs " +
                                std::to_string(t2.counts.size()) + ")");
  std::uint64_t sum = 0;
  for (std::size_t c = 0; c < t1.counts.size(); ++c)
    sum += t1.counts[c] > t2.counts[c] ? t1.counts[c] - t2.counts[c] : t2.counts[c] - t1.counts[c];
  return sum;
}

namespace {

std::vector<LineType> all_types(const ProjectivePlane& plane, const PartialColoring& coloring) {
  if (coloring.size() != plane.num_points())
    throw std::invalid_argument("coloring has " + std::to_string(coloring.size()) + " entries for a plane with " +
                                std::to_string(plane.num_points()) + " points");
  std::vector<LineType> types;
  types.reserve(plane.num_lines());
  for (LineId l = 0; l < plane.num_lines(); ++l) types.push_back(line_type(plane, coloring, l));
  return types;
}

}  // namespace

std::vector<LinePair> find_bad_pairs(const ProjectivePlane& plane, const PartialColoring& coloring) {
  if (!coloring.is_total()) throw std::invalid_argument("bad pairs are defined for total colorings only");
  const auto types = all_types(plane, coloring);
  std::vector<LineId> order(types.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](LineId x, LineId y) { return types[x].counts < types[y].counts; });
  std::vector<LinePair> pairs;
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start + 1;
    while (end < order.size() && types[order[end]] == types[order[start]]) ++end;
    for (std::size_t i = start; i < end; ++i)
      for (std::size_t j = i + 1; j < end; ++j)
        pairs.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
    start = end;
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

double dangerous_threshold(std::uint32_t order) { return 22.0 * std::log(static_cast<double>(order)); }

std::vector<LinePair> find_dangerous_pairs(const ProjectivePlane& plane, const PartialColoring& partial) {
  return find_dangerous_pairs(plane, partial, dangerous_threshold(plane.order()));
}

std::vector<LinePair> find_dangerous_pairs(const ProjectivePlane& plane, const PartialColoring& partial,
                                           double threshold) {
  const auto types = all_types(plane, partial);
  std::vector<LinePair> pairs;
  for (LineId i = 0; i < types.size(); ++i)
    for (LineId j = i + 1; j < types.size(); ++j)
      if (static_cast<double>(l1_distance(types[i], types[j])) <= threshold) pairs.emplace_back(i, j);
  return pairs;
}

std::pair<double, double> sset_window(std::uint32_t order) {
  const double ln = std::log(static_cast<double>(order));
  return {ln, 11.0 * ln};
}

double sset_size_bound(std::uint32_t order) {
  const double n = order;
  return (n * n + n + 1.0) * 11.0 * std::log(n) / (n + 1.0);
}

double default_inclusion_prob(std::uint32_t order) {
  return std::min(1.0, 6.0 * std::log(static_cast<double>(order)) / (order + 1.0));
}

SSet SSet::make(const ProjectivePlane& plane, std::vector<PointId> members) {
  if (plane.order() < 2) throw std::invalid_argument("S-sets need order at least 2 (ln 1 = 0)");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SSet s;
  s.is_member_.assign(plane.num_points(), false);
  for (PointId p : members) {
    if (p >= plane.num_points()) throw std::invalid_argument("S member " + std::to_string(p) + " is not a point");
    s.is_member_[p] = true;
  }
  s.members_ = std::move(members);
  s.per_line_.assign(plane.num_lines(), 0);
  const auto [lo, hi] = sset_window(plane.order());
  for (LineId l = 0; l < plane.num_lines(); ++l) {
    for (PointId p : plane.line(l)) s.per_line_[l] += s.is_member_[p] ? 1 : 0;
    const double c = s.per_line_[l];
    if (c < lo || c > hi)
      throw std::invalid_argument("line " + std::to_string(l) + " meets S in " + std::to_string(s.per_line_[l]) +
                                  " points, outside [ln n, 11 ln n]");
  }
  return s;
}

SampleSResult sample_S(const ProjectivePlane& plane, Rng& rng, double inclusion_prob, std::size_t max_attempts) {
  if (plane.order() < 2) throw std::invalid_argument("S-sets need order at least 2 (ln 1 = 0)");
  if (!(inclusion_prob >= 0.0 && inclusion_prob <= 1.0))
    throw std::invalid_argument("inclusion probability must lie in [0, 1]");
  const auto [lo, hi] = sset_window(plane.order());
  std::vector<bool> in(plane.num_points());
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    for (PointId p = 0; p < plane.num_points(); ++p) in[p] = rng.bernoulli(inclusion_prob);
    bool ok = true;
    for (LineId l = 0; l < plane.num_lines() && ok; ++l) {
      std::uint32_t c = 0;
      for (PointId p : plane.line(l)) c += in[p] ? 1 : 0;
      ok = c >= lo && c <= hi;
    }
    if (!ok) continue;
    std::vector<PointId> members;
    for (PointId p = 0; p < plane.num_points(); ++p)
      if (in[p]) members.push_back(p);
    return {SSet::make(plane, std::move(members)), attempt, sset_size_bound(plane.order())};
  }
  throw Infeasible("no S-set found in " + std::to_string(max_attempts) + " attempts");
}

PartialColoring sample_partial(const ProjectivePlane& plane, const std::vector<PointId>& s_members,
                               std::uint32_t colors, Rng& rng) {
  PartialColoring f(colors, plane.num_points());
  std::vector<bool> in_s(plane.num_points(), false);
  for (PointId p : s_members) in_s.at(p) = true;
  for (PointId p = 0; p < plane.num_points(); ++p)
    if (!in_s[p]) f.set(p, static_cast<Color>(rng.below(colors) + 1));
  return f;
}

Fact2Report fact2_check(const ProjectivePlane& plane, const PartialColoring& partial, const SSet& s, std::uint32_t a,
                        std::uint32_t b) {
  if (partial.uncolored() != s.members())
    throw std::invalid_argument("the partial coloring must leave exactly the S-set uncolored");
  Fact2Report report;
  report.a = a;
  report.b = b;
  const auto pairs = find_dangerous_pairs(plane, partial);
  report.dangerous_pairs = pairs.size();

  std::vector<std::size_t> degree(plane.num_lines(), 0);
  for (const auto& [l1, l2] : pairs) {
    ++degree[l1];
    ++degree[l2];
  }
  for (LineId l = 0; l < plane.num_lines(); ++l)
    if (degree[l] > report.worst_line_degree) {
      report.worst_line = l;
      report.worst_line_degree = degree[l];
    }

  std::vector<std::size_t> pairs_at(plane.num_points(), 0);
  for (const auto& [l1, l2] : pairs) {
    for (PointId p : plane.line(l1)) ++pairs_at[p];
    for (PointId p : plane.line(l2))
      if (!plane.contains(l1, p)) ++pairs_at[p];
  }
  for (PointId p : s.members()) {
    std::size_t involved = 0;
    for (LineId l : plane.lines_through(p)) involved += degree[l] > 0 ? 1 : 0;
    if (!report.worst_point || involved > report.worst_point_lines) {
      report.worst_point = p;
      report.worst_point_lines = involved;
    }
    report.max_pairs_per_point = std::max(report.max_pairs_per_point, pairs_at[p]);
  }
  report.pairs_per_point_ok = report.max_pairs_per_point <= std::size_t{a} * b;
  report.pass = report.worst_line_degree <= a && report.worst_point_lines <= b;
  return report;
}

}  // namespace ppc
