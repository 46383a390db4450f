#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ppc/coloring.hpp"
#include "ppc/plane.hpp"
#include "ppc/problem.hpp"

namespace ppc {

/**
 * Equal-type events over line pairs.
 *
 * Event x compares side A (points of one line not on the other) with side
 * B; it occurs when base_diff + count(A) - count(B) is the zero vector,
 * base_diff carrying the contribution of points fixed outside the
 * instance. Violating extensions of a free set on one side are exactly
 * the arrangements of one multiset of colors, ranked combinatorially.
 */
class EqualTypeModel final : public ConstraintModel {
 public:
  struct Pair {
    std::vector<VarId> side_a;
    std::vector<VarId> side_b;
    std::vector<std::int32_t> base_diff;  // empty means all zero
  };

  EqualTypeModel(std::uint32_t colors, std::vector<Pair> pairs) : colors_(colors), pairs_(std::move(pairs)) {}

  bool violated(const ProblemInstance& instance, std::size_t event, std::span<const Color> values) const override;
  std::uint64_t count_extensions(const ProblemInstance& instance, std::size_t event, std::span<const VarId> free,
                                 std::span<const Color> values) const override;
  std::uint64_t rank_extension(const ProblemInstance& instance, std::size_t event, std::span<const VarId> free,
                               std::span<const Color> values) const override;
  bool unrank_extension(const ProblemInstance& instance, std::size_t event, std::span<const VarId> free,
                        std::uint64_t label, std::span<Color> values) const override;

  const Pair& pair(std::size_t event) const { return pairs_[event]; }

 private:
  // Color counts the free set must take for the event to occur; false if unreachable.
  bool required_counts(std::size_t event, std::span<const VarId> free, std::span<const Color> values,
                       std::vector<std::uint32_t>& need) const;

  std::uint32_t colors_;
  std::vector<Pair> pairs_;
};

/// Plane problem plus the line pair behind each event.
struct PlaneProblem {
  ProblemInstance instance;
  std::vector<LinePair> event_pairs;
  std::uint32_t m = 0;
};

/// Largest m for which m! fits the 64-bit extension labels.
inline constexpr std::uint32_t kMaxFreeSize = 20;

/**
 * One event per unordered line pair, scope = symmetric difference, free
 * set = pivot plus the m-1 smallest other points of its side, m_x = m!.
 * Variables are the plane points. Requires 2 <= m <= min(side size, 20).
 */
PlaneProblem build_full_problem(const ProjectivePlane& plane, std::uint32_t colors, std::uint32_t m);

/// m minimizing the entropy-compression color bound for full mode, clamped to [2, min(n, 20)].
std::uint32_t default_full_m(const ProjectivePlane& plane);

struct ExtensionProblem {
  PlaneProblem problem;
  Fact2Report fact2;
  /// Smallest nonempty side (S-points of one line off the other) over all events; upper limit for m.
  std::uint32_t capacity = 0;
};

/**
 * Events restricted to dangerous pairs of `partial`; variables are the
 * S-points (labels are their point ids). Throws Infeasible when the
 * degree caps (a, b) fail or a pair is already bad with no S-point left
 * to change it; std::invalid_argument for an empty S, a color-count
 * mismatch or m outside [2, capacity].
 */
ExtensionProblem build_extension_problem(const ProjectivePlane& plane, const SSet& s, const PartialColoring& partial,
                                         std::uint32_t colors, std::uint32_t a, std::uint32_t b, std::uint32_t m);

/// Smallest nonempty side over the dangerous pairs of `partial`, or 0 when there are none.
std::uint32_t extension_capacity(const ProjectivePlane& plane, const SSet& s, const PartialColoring& partial);

/// optimal_m(a, b) clamped to [2, min(capacity, 20)].
std::uint32_t default_extension_m(std::uint32_t a, std::uint32_t b, std::uint32_t capacity);

/// Plane coloring from a solver configuration: `base` with each variable's point overwritten.
PartialColoring to_plane_coloring(const ProblemInstance& instance, const PartialColoring& base,
                                  std::span<const Color> values);

/// Solver configuration (per variable) read off a plane coloring.
std::vector<Color> to_instance_values(const ProblemInstance& instance, const PartialColoring& coloring);

}  // namespace ppc
