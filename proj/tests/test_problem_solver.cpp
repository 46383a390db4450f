#include <gtest/gtest.h>

#include <memory>
#include <numeric>

#include "ppc/problem.hpp"
#include "ppc/solver.hpp"

using namespace ppc;

namespace {

// Monochromatic triples on a ring of variables; each event resets its whole scope.
ProblemInstance mono_triples(std::uint32_t vars, std::uint32_t colors, std::uint32_t free_count = 3) {
  std::vector<Event> events;
  for (VarId v = 0; v + 2 < vars; ++v) {
    Event e;
    e.scope = {v, v + 1, v + 2};
    e.free_count = free_count;
    for (std::size_t slot = 0; slot < 3; ++slot) {
      if (free_count == 3) {
        e.free_sets.insert(e.free_sets.end(), e.scope.begin(), e.scope.end());
      } else {
        e.free_sets.push_back(e.scope[slot]);
      }
    }
    e.max_extensions = free_count == 3 ? colors : 1;
    events.push_back(std::move(e));
  }
  auto model = std::make_shared<PredicateModel>(
      [](std::size_t, std::span<const Color> s) { return s[0] == s[1] && s[1] == s[2]; });
  return ProblemInstance(std::vector<std::uint32_t>(vars, colors), std::move(events), model);
}

}  // namespace

TEST(Problem, ValidatesStructure) {
  auto model = std::make_shared<PredicateModel>([](std::size_t, std::span<const Color>) { return false; });
  Event ok{{0, 1}, 1, {0, 1}, 1};
  EXPECT_NO_THROW(ProblemInstance({2, 2}, {ok}, model));
  EXPECT_THROW(ProblemInstance({2, 2}, {ok}, nullptr), std::invalid_argument);
  EXPECT_THROW(ProblemInstance({0, 2}, {ok}, model), std::invalid_argument);
  EXPECT_THROW(ProblemInstance({2, 2}, {Event{{1, 0}, 1, {1, 0}, 1}}, model), std::invalid_argument);
  EXPECT_THROW(ProblemInstance({2, 2}, {Event{{0, 1}, 1, {1, 0}, 1}}, model), std::invalid_argument);  // pivot missing
  EXPECT_THROW(ProblemInstance({2, 2}, {Event{{0, 1}, 1, {0}, 1}}, model), std::invalid_argument);
  EXPECT_THROW(ProblemInstance({2, 2}, {Event{{0, 5}, 1, {0, 5}, 1}}, model), std::invalid_argument);
  EXPECT_THROW(ProblemInstance({2, 2}, {ok}, model, {7, 7}), std::invalid_argument);
}

TEST(Problem, BucketsAndProfile) {
  const auto inst = mono_triples(6, 2);
  EXPECT_EQ(inst.num_events(), 4u);
  EXPECT_EQ(inst.exponents(), (std::vector<std::uint32_t>{3}));
  EXPECT_EQ(inst.degree(3), 3u);  // middle variables lie in three triples
  EXPECT_EQ(inst.bucket_position(2, 0), 1u);
  EXPECT_EQ(inst.bucket_position(2, 2), 3u);
  EXPECT_EQ(inst.bucket_position(0, 2), 0u);
  const auto profile = inst.profile();
  EXPECT_EQ(profile.per_l.at(3).degree, 3u);
  EXPECT_EQ(profile.per_l.at(3).extensions, 2u);
}

TEST(Problem, DefaultRankUnrankConsistent) {
  const auto inst = mono_triples(5, 3);
  const auto& model = inst.model();
  std::vector<Color> values{2, 2, 2, 1, 3};
  const auto& e = inst.event(0);
  const auto free = e.free_set(0);
  EXPECT_EQ(model.count_extensions(inst, 0, free, values), 3u);
  EXPECT_EQ(model.rank_extension(inst, 0, free, values), 2u);
  std::vector<Color> out = values;
  EXPECT_TRUE(model.unrank_extension(inst, 0, free, 3, out));
  EXPECT_EQ(out[0], 3);
  EXPECT_FALSE(model.unrank_extension(inst, 0, free, 4, out));
  values[0] = 1;
  EXPECT_EQ(model.rank_extension(inst, 0, free, values), 0u);
}

TEST(Problem, DetectViolationsInOrder) {
  const auto inst = mono_triples(5, 2);
  const std::vector<Color> values{1, 1, 1, 1, 0};
  EXPECT_EQ(detect_violations(inst, values, 1), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(detect_violations(inst, values, 3), (std::vector<std::size_t>{1}));
}

TEST(Solver, SucceedsAndVerifies) {
  const auto inst = mono_triples(40, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = run(inst, {.seed = seed, .max_steps = 100000, .on_step = {}});
    ASSERT_EQ(r.status, RunStatus::Success);
    for (std::size_t x = 0; x < inst.num_events(); ++x) EXPECT_FALSE(inst.violated(x, r.assignment));
    EXPECT_EQ(r.reg.final_config, r.assignment);
  }
}

TEST(Solver, Deterministic) {
  const auto inst = mono_triples(30, 2, 1);
  const auto a = run(inst, {.seed = 9, .max_steps = 100000, .on_step = {}});
  const auto b = run(inst, {.seed = 9, .max_steps = 100000, .on_step = {}});
  EXPECT_EQ(a.reg.entries, b.reg.entries);
  EXPECT_EQ(a.reg.tapes, b.reg.tapes);
  EXPECT_EQ(a.assignment, b.assignment);
}

TEST(Solver, ExhaustsOnUnsatisfiable) {
  // A single two-variable event over a one-color domain is always violated.
  auto model = std::make_shared<PredicateModel>([](std::size_t, std::span<const Color>) { return true; });
  const ProblemInstance inst({1, 1}, {Event{{0, 1}, 2, {0, 1, 0, 1}, 1}}, model);
  const auto r = run(inst, {.seed = 1, .max_steps = 1000, .on_step = {}});
  EXPECT_EQ(r.status, RunStatus::Exhausted);
  EXPECT_EQ(r.steps, 1000u);
  EXPECT_EQ(r.violations, 500u);
}

TEST(Solver, ConservationAndProgressAccounting) {
  const auto inst = mono_triples(25, 2);
  std::vector<std::size_t> colored_after;
  const auto r = run(inst, {.seed = 4, .max_steps = 100000, .on_step = [&](std::uint64_t, std::span<const Color> c) {
                              colored_after.push_back(std::count_if(c.begin(), c.end(), [](Color x) { return x; }));
                            }});
  ASSERT_EQ(r.status, RunStatus::Success);
  std::size_t consumed = 0;
  for (const auto& tape : r.reg.tapes) consumed += tape.size();
  EXPECT_EQ(consumed, r.steps);
  EXPECT_EQ(r.reg.entries.size(), r.steps);
  std::uint64_t reset = 0;
  for (std::size_t i = 0; i < r.reg.entries.size(); ++i) {
    if (const auto& rec = r.reg.entries[i].record) reset += rec->alpha;
    EXPECT_EQ(colored_after[i], i + 1 - reset) << "step " << i + 1;
  }
  std::size_t records = 0;
  for (const auto& e : r.reg.entries) records += e.record.has_value();
  EXPECT_EQ(records, r.violations);
}

TEST(Solver, EmptyInstance) {
  auto model = std::make_shared<PredicateModel>([](std::size_t, std::span<const Color>) { return false; });
  const ProblemInstance inst({}, {}, model);
  const auto r = run(inst, {.seed = 0, .max_steps = 10, .on_step = {}});
  EXPECT_EQ(r.status, RunStatus::Success);
  EXPECT_EQ(r.steps, 0u);
}
