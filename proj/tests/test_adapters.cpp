#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ppc/adapters.hpp"
#include "ppc/errors.hpp"
#include "ppc/solver.hpp"

using namespace ppc;

namespace {

const ConstraintModel& generic(const ConstraintModel& m) { return m; }

}  // namespace

TEST(FullProblem, Structure) {
  const auto plane = build_pg2(3);
  const auto p = build_full_problem(plane, 5, 3);
  EXPECT_EQ(p.instance.num_vars(), 13u);
  EXPECT_EQ(p.instance.num_events(), 78u);
  EXPECT_EQ(p.event_pairs.size(), 78u);
  EXPECT_EQ(p.instance.exponents(), (std::vector<std::uint32_t>{3}));
  // Each point is off-intersection for 4 lines x 9 partner lines.
  EXPECT_EQ(p.instance.degree(3), 36u);
  for (std::size_t x = 0; x < p.instance.num_events(); ++x) {
    const auto& e = p.instance.event(x);
    EXPECT_EQ(e.scope.size(), 6u);
    EXPECT_EQ(e.max_extensions, 6u);
    const auto [l1, l2] = p.event_pairs[x];
    for (std::size_t slot = 0; slot < e.scope.size(); ++slot) {
      const auto row = e.free_set(slot);
      const bool on_l1 = plane.contains(l1, e.scope[slot]);
      for (VarId v : row) EXPECT_EQ(plane.contains(l1, v), on_l1);
    }
  }
}

TEST(FullProblem, RejectsBadM) {
  const auto plane = build_pg2(3);
  EXPECT_THROW(build_full_problem(plane, 5, 1), std::invalid_argument);
  EXPECT_THROW(build_full_problem(plane, 5, 4), std::invalid_argument);
  EXPECT_EQ(default_full_m(build_pg2(2)), 2u);
  EXPECT_EQ(default_full_m(plane), 3u);
}

TEST(EqualTypeModel, ViolationMeansEqualTypes) {
  const auto plane = build_pg2(3);
  const auto p = build_full_problem(plane, 3, 2);
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = sample_partial(plane, {}, 3, rng);
    for (std::size_t x = 0; x < p.instance.num_events(); ++x) {
      const auto [l1, l2] = p.event_pairs[x];
      EXPECT_EQ(p.instance.violated(x, c.assignment()), line_type(plane, c, l1) == line_type(plane, c, l2));
    }
  }
}

TEST(EqualTypeModel, CombinatorialRankMatchesEnumeration) {
  const auto plane = build_pg2(3);
  const auto p = build_full_problem(plane, 3, 3);
  const auto& model = p.instance.model();
  Rng rng(21);
  std::size_t violating_checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto values = sample_partial(plane, {}, 3, rng).assignment();
    for (std::size_t x = 0; x < p.instance.num_events(); x += 7) {
      const auto& e = p.instance.event(x);
      for (std::size_t slot = 0; slot < e.scope.size(); ++slot) {
        const auto free = e.free_set(slot);
        const auto n_comb = model.count_extensions(p.instance, x, free, values);
        const auto n_enum = generic(model).ConstraintModel::count_extensions(p.instance, x, free, values);
        ASSERT_EQ(n_comb, n_enum);
        EXPECT_LE(n_comb, e.max_extensions);
        for (std::uint64_t label = 1; label <= n_comb; ++label) {
          auto a = values, b = values;
          ASSERT_TRUE(model.unrank_extension(p.instance, x, free, label, a));
          ASSERT_TRUE(generic(model).ConstraintModel::unrank_extension(p.instance, x, free, label, b));
          ASSERT_EQ(a, b);
          ASSERT_EQ(model.rank_extension(p.instance, x, free, a), label);
          ++violating_checked;
        }
        auto out = values;
        EXPECT_FALSE(model.unrank_extension(p.instance, x, free, n_comb + 1, out));
        EXPECT_EQ(model.rank_extension(p.instance, x, free, values),
                  generic(model).ConstraintModel::rank_extension(p.instance, x, free, values));
      }
    }
  }
  EXPECT_GT(violating_checked, 0u);
}

TEST(FullProblem, SolverSuccessIsLegitimate) {
  const auto plane = build_pg2(4);
  const auto p = build_full_problem(plane, 10, default_full_m(plane));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto r = run(p.instance, {.seed = seed, .max_steps = 1000000, .on_step = {}});
    ASSERT_EQ(r.status, RunStatus::Success);
    const auto c = to_plane_coloring(p.instance, PartialColoring(10, plane.num_points()), r.assignment);
    EXPECT_TRUE(is_legitimate(plane, c));
  }
}

TEST(ExtensionProblem, VariablesAreSPoints) {
  const auto plane = build_pg2(3);
  const auto s = SSet::make(plane, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  Rng rng(4);
  const auto partial = sample_partial(plane, s.members(), 4, rng);
  const auto cap = extension_capacity(plane, s, partial);
  EXPECT_EQ(cap, 3u);
  const auto ext = build_extension_problem(plane, s, partial, 4, 12, 4, 2);
  EXPECT_EQ(ext.problem.instance.num_vars(), 13u);
  EXPECT_EQ(ext.problem.instance.num_events(), 78u);
  EXPECT_LE(ext.problem.instance.degree(2), 12u * 4u);
  EXPECT_THROW(build_extension_problem(plane, s, partial, 4, 11, 4, 2), Infeasible);
  EXPECT_THROW(build_extension_problem(plane, s, partial, 3, 12, 4, 2), std::invalid_argument);
  EXPECT_THROW(build_extension_problem(plane, s, partial, 4, 12, 4, 4), std::invalid_argument);
  EXPECT_EQ(default_extension_m(1, 4, cap), 3u);
  EXPECT_EQ(default_extension_m(1, 4, 2), 2u);
}

TEST(ExtensionProblem, FixedPointsEnterThroughBaseDifference) {
  const auto plane = build_pg2(3);
  Rng rng(17);
  for (;;) {
    const auto s = sample_S(plane, rng, 0.75, 1000).set;
    const auto partial = sample_partial(plane, s.members(), 4, rng);
    if (extension_capacity(plane, s, partial) < 2) continue;
    const auto ext = build_extension_problem(plane, s, partial, 4, 12, 4, 2);
    const auto& inst = ext.problem.instance;
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Color> values(inst.num_vars());
      for (auto& v : values) v = static_cast<Color>(rng.below(4) + 1);
      const auto c = to_plane_coloring(inst, partial, values);
      EXPECT_EQ(to_instance_values(inst, c), values);
      for (std::size_t x = 0; x < inst.num_events(); ++x) {
        const auto [l1, l2] = ext.problem.event_pairs[x];
        EXPECT_EQ(inst.violated(x, values), line_type(plane, c, l1) == line_type(plane, c, l2));
      }
    }
    return;
  }
}
