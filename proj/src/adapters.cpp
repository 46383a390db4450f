#include "ppc/adapters.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "ppc/bounds.hpp"
#include "ppc/errors.hpp"

namespace ppc {

namespace {

std::uint64_t multinomial(const std::vector<std::uint32_t>& counts) {
  unsigned __int128 result = 1;
  std::uint64_t k = 0;
  for (auto c : counts)
    for (std::uint32_t j = 1; j <= c; ++j) {
      ++k;
      result = result * k / j;
    }
  return static_cast<std::uint64_t>(result);
}

bool on_side(const std::vector<VarId>& side, VarId v) { return std::binary_search(side.begin(), side.end(), v); }

std::uint64_t factorial(std::uint32_t m) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= m; ++i) f *= i;
  return f;
}

// Free-set rows: pivot plus the m-1 smallest other members of its side.
void append_free_rows(const std::vector<VarId>& scope, const std::vector<VarId>& side_a,
                      const std::vector<VarId>& side_b, std::uint32_t m, std::vector<VarId>& rows) {
  for (VarId pivot : scope) {
    const auto& side = on_side(side_a, pivot) ? side_a : side_b;
    std::vector<VarId> row{pivot};
    for (VarId v : side) {
      if (row.size() == m) break;
      if (v != pivot) row.push_back(v);
    }
    std::sort(row.begin(), row.end());
    rows.insert(rows.end(), row.begin(), row.end());
  }
}

std::vector<VarId> merged(const std::vector<VarId>& a, const std::vector<VarId>& b) {
  std::vector<VarId> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool EqualTypeModel::violated(const ProblemInstance&, std::size_t event, std::span<const Color> values) const {
  thread_local std::vector<std::int32_t> diff;
  const Pair& p = pairs_[event];
  if (p.base_diff.empty())
    diff.assign(colors_, 0);
  else
    diff.assign(p.base_diff.begin(), p.base_diff.end());
  for (VarId v : p.side_a)
    if (values[v] != kUncolored) ++diff[values[v] - 1];
  for (VarId v : p.side_b)
    if (values[v] != kUncolored) --diff[values[v] - 1];
  return std::all_of(diff.begin(), diff.end(), [](std::int32_t x) { return x == 0; });
}

bool EqualTypeModel::required_counts(std::size_t event, std::span<const VarId> free, std::span<const Color> values,
                                     std::vector<std::uint32_t>& need) const {
  const Pair& p = pairs_[event];
  const bool free_on_a = on_side(p.side_a, free.front());
  std::vector<std::int64_t> want(colors_, 0);
  if (!p.base_diff.empty())
    for (std::uint32_t c = 0; c < colors_; ++c) want[c] = free_on_a ? -p.base_diff[c] : p.base_diff[c];
  auto is_free = [&](VarId v) { return std::binary_search(free.begin(), free.end(), v); };
  // free on A: need = count(B) - base - count(A fixed); free on B: need = base + count(A) - count(B fixed)
  for (VarId v : p.side_a)
    if (values[v] != kUncolored && !is_free(v)) want[values[v] - 1] += free_on_a ? -1 : 1;
  for (VarId v : p.side_b)
    if (values[v] != kUncolored && !is_free(v)) want[values[v] - 1] += free_on_a ? 1 : -1;
  need.assign(colors_, 0);
  std::int64_t total = 0;
  for (std::uint32_t c = 0; c < colors_; ++c) {
    if (want[c] < 0) return false;
    need[c] = static_cast<std::uint32_t>(want[c]);
    total += want[c];
  }
  return total == static_cast<std::int64_t>(free.size());
}

std::uint64_t EqualTypeModel::count_extensions(const ProblemInstance&, std::size_t event, std::span<const VarId> free,
                                               std::span<const Color> values) const {
  std::vector<std::uint32_t> need;
  return required_counts(event, free, values, need) ? multinomial(need) : 0;
}

std::uint64_t EqualTypeModel::rank_extension(const ProblemInstance&, std::size_t event, std::span<const VarId> free,
                                             std::span<const Color> values) const {
  std::vector<std::uint32_t> need;
  if (!required_counts(event, free, values, need)) return 0;
  std::vector<std::uint32_t> have(colors_, 0);
  for (VarId v : free) {
    if (values[v] == kUncolored) return 0;
    ++have[values[v] - 1];
  }
  if (have != need) return 0;

  unsigned __int128 block = multinomial(need);
  std::uint64_t rem = free.size();
  unsigned __int128 rank = 0;
  for (VarId v : free) {
    const std::uint32_t t = values[v] - 1u;
    for (std::uint32_t c = 0; c < t; ++c)
      if (need[c]) rank += block * need[c] / rem;
    block = block * need[t] / rem;
    --need[t];
    --rem;
  }
  return static_cast<std::uint64_t>(rank) + 1;
}

bool EqualTypeModel::unrank_extension(const ProblemInstance&, std::size_t event, std::span<const VarId> free,
                                      std::uint64_t label, std::span<Color> values) const {
  std::vector<std::uint32_t> need;
  if (label == 0 || !required_counts(event, free, values, need)) return false;
  unsigned __int128 block = multinomial(need);
  if (label > block) return false;
  unsigned __int128 r = label - 1;
  std::uint64_t rem = free.size();
  for (VarId v : free) {
    for (std::uint32_t c = 0; c < colors_; ++c) {
      if (!need[c]) continue;
      const unsigned __int128 sub = block * need[c] / rem;
      if (r < sub) {
        values[v] = static_cast<Color>(c + 1);
        block = sub;
        --need[c];
        --rem;
        break;
      }
      r -= sub;
    }
  }
  return true;
}

PlaneProblem build_full_problem(const ProjectivePlane& plane, std::uint32_t colors, std::uint32_t m) {
  if (colors == 0 || colors > 65535) throw std::invalid_argument("color count must lie in 1..65535");
  if (m < 2 || m > plane.order() || m > kMaxFreeSize)
    throw std::invalid_argument("m = " + std::to_string(m) + " outside [2, min(n, " + std::to_string(kMaxFreeSize) +
                                ")] for order " + std::to_string(plane.order()));
  std::vector<Event> events;
  std::vector<EqualTypeModel::Pair> pairs;
  std::vector<LinePair> event_pairs;
  const std::uint64_t ext = factorial(m);
  for (LineId i = 0; i < plane.num_lines(); ++i)
    for (LineId j = i + 1; j < plane.num_lines(); ++j) {
      const auto& li = plane.line(i);
      const auto& lj = plane.line(j);
      EqualTypeModel::Pair pair;
      std::set_difference(li.begin(), li.end(), lj.begin(), lj.end(), std::back_inserter(pair.side_a));
      std::set_difference(lj.begin(), lj.end(), li.begin(), li.end(), std::back_inserter(pair.side_b));
      if (pair.side_a.size() < m || pair.side_b.size() < m)
        throw std::invalid_argument("lines " + std::to_string(i) + " and " + std::to_string(j) +
                                    " leave fewer than m points outside their intersection");
      Event e;
      e.scope = merged(pair.side_a, pair.side_b);
      e.free_count = m;
      e.max_extensions = ext;
      append_free_rows(e.scope, pair.side_a, pair.side_b, m, e.free_sets);
      events.push_back(std::move(e));
      pairs.push_back(std::move(pair));
      event_pairs.emplace_back(i, j);
    }
  auto model = std::make_shared<EqualTypeModel>(colors, std::move(pairs));
  std::vector<std::uint32_t> domains(plane.num_points(), colors);
  return {ProblemInstance(std::move(domains), std::move(events), std::move(model)), std::move(event_pairs), m};
}

std::uint32_t default_full_m(const ProjectivePlane& plane) {
  const std::uint32_t n = plane.order();
  if (n < 2) return 2;
  const double degree = (n + 1.0) * n * n;
  return optimal_m_for_degree(degree, std::min(n, kMaxFreeSize)).m;
}

namespace {

struct SidedPair {
  LinePair lines;
  EqualTypeModel::Pair pair;
};

std::vector<SidedPair> extension_pairs(const ProjectivePlane& plane, const SSet& s, const PartialColoring& partial,
                                       const std::vector<LinePair>& dangerous) {
  const auto& members = s.members();
  auto var_of = [&](PointId p) {
    return static_cast<VarId>(std::lower_bound(members.begin(), members.end(), p) - members.begin());
  };
  std::vector<SidedPair> out;
  out.reserve(dangerous.size());
  for (const auto& [i, j] : dangerous) {
    SidedPair sp{{i, j}, {}};
    sp.pair.base_diff.assign(partial.colors(), 0);
    for (PointId p : plane.line(i)) {
      if (plane.contains(j, p)) continue;
      if (s.contains(p))
        sp.pair.side_a.push_back(var_of(p));
      else if (partial[p] != kUncolored)
        ++sp.pair.base_diff[partial[p] - 1];
    }
    for (PointId p : plane.line(j)) {
      if (plane.contains(i, p)) continue;
      if (s.contains(p))
        sp.pair.side_b.push_back(var_of(p));
      else if (partial[p] != kUncolored)
        --sp.pair.base_diff[partial[p] - 1];
    }
    out.push_back(std::move(sp));
  }
  return out;
}

std::uint32_t min_side(const std::vector<SidedPair>& pairs) {
  std::size_t best = 0;
  for (const auto& sp : pairs)
    for (const auto* side : {&sp.pair.side_a, &sp.pair.side_b})
      if (!side->empty() && (best == 0 || side->size() < best)) best = side->size();
  return static_cast<std::uint32_t>(best);
}

}  // namespace

std::uint32_t extension_capacity(const ProjectivePlane& plane, const SSet& s, const PartialColoring& partial) {
  return min_side(extension_pairs(plane, s, partial, find_dangerous_pairs(plane, partial)));
}

std::uint32_t default_extension_m(std::uint32_t a, std::uint32_t b, std::uint32_t capacity) {
  const std::uint32_t upper = std::min(capacity, kMaxFreeSize);
  if (upper < 2) return 2;
  return optimal_m(a, b, upper).m;
}

ExtensionProblem build_extension_problem(const ProjectivePlane& plane, const SSet& s, const PartialColoring& partial,
                                         std::uint32_t colors, std::uint32_t a, std::uint32_t b, std::uint32_t m) {
  if (s.size() == 0) throw std::invalid_argument("extension mode needs a nonempty S-set");
  if (partial.colors() != colors)
    throw std::invalid_argument("partial coloring uses " + std::to_string(partial.colors()) + " colors, expected " +
                                std::to_string(colors));
  const Fact2Report fact2 = fact2_check(plane, partial, s, a, b);
  if (!fact2.pass)
    throw Infeasible("degree caps fail: worst line in " + std::to_string(fact2.worst_line_degree) +
                     " dangerous pairs (a = " + std::to_string(a) + "), worst S-point on " +
                     std::to_string(fact2.worst_point_lines) + " involved lines (b = " + std::to_string(b) + ")");

  auto sided = extension_pairs(plane, s, partial, find_dangerous_pairs(plane, partial));
  std::vector<Event> events;
  std::vector<EqualTypeModel::Pair> pairs;
  std::vector<LinePair> event_pairs;
  const std::uint64_t ext = factorial(std::min(m, kMaxFreeSize));
  const std::uint32_t capacity = min_side(sided);
  if (m < 2 || m > kMaxFreeSize || (capacity != 0 && m > capacity))
    throw std::invalid_argument("m = " + std::to_string(m) + " outside [2, " +
                                std::to_string(std::min(capacity, kMaxFreeSize)) + "]");
  for (auto& sp : sided) {
    if (sp.pair.side_a.empty() && sp.pair.side_b.empty()) {
      if (std::all_of(sp.pair.base_diff.begin(), sp.pair.base_diff.end(), [](std::int32_t x) { return x == 0; }))
        throw Infeasible("lines " + std::to_string(sp.lines.first) + " and " + std::to_string(sp.lines.second) +
                         " already form a bad pair with no S-point to recolor");
      continue;
    }
    Event e;
    e.scope = merged(sp.pair.side_a, sp.pair.side_b);
    e.free_count = m;
    e.max_extensions = ext;
    append_free_rows(e.scope, sp.pair.side_a, sp.pair.side_b, m, e.free_sets);
    events.push_back(std::move(e));
    pairs.push_back(std::move(sp.pair));
    event_pairs.push_back(sp.lines);
  }
  std::vector<std::uint32_t> domains(s.size(), colors);
  std::vector<std::uint32_t> labels(s.members().begin(), s.members().end());
  return {{ProblemInstance(std::move(domains), std::move(events),
                           std::make_shared<EqualTypeModel>(colors, std::move(pairs)), std::move(labels)),
           std::move(event_pairs), m},
          fact2,
          capacity};
}

PartialColoring to_plane_coloring(const ProblemInstance& instance, const PartialColoring& base,
                                  std::span<const Color> values) {
  PartialColoring out = base;
  for (VarId v = 0; v < instance.num_vars(); ++v) out.set(instance.label(v), values[v]);
  return out;
}

std::vector<Color> to_instance_values(const ProblemInstance& instance, const PartialColoring& coloring) {
  std::vector<Color> values(instance.num_vars());
  for (VarId v = 0; v < instance.num_vars(); ++v) values[v] = coloring[instance.label(v)];
  return values;
}

}  // namespace ppc
