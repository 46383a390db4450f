#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "ppc/coloring.hpp"
#include "ppc/errors.hpp"

using namespace ppc;

namespace {

PartialColoring random_total(const ProjectivePlane& plane, std::uint32_t d, std::uint64_t seed) {
  Rng rng(seed);
  return sample_partial(plane, {}, d, rng);
}

}  // namespace

TEST(Coloring, ConstructionChecksRange) {
  EXPECT_THROW(PartialColoring(3, std::vector<Color>{1, 4}), std::invalid_argument);
  EXPECT_THROW(PartialColoring(0, std::vector<Color>{}), std::invalid_argument);
  PartialColoring c(3, 4);
  EXPECT_EQ(c.uncolored().size(), 4u);
  EXPECT_FALSE(c.is_total());
  c.set(0, 3);
  EXPECT_THROW(c.set(1, 4), std::invalid_argument);
}

TEST(Coloring, LineTypeSumsToLineSize) {
  const auto plane = build_pg2(5);
  Rng rng(3);
  std::vector<PointId> s{0, 7, 12, 30};
  const auto partial = sample_partial(plane, s, 4, rng);
  for (LineId l = 0; l < plane.num_lines(); ++l) {
    const auto t = line_type(plane, partial, l);
    std::uint32_t uncolored = 0;
    for (PointId p : plane.line(l)) uncolored += partial[p] == kUncolored;
    EXPECT_EQ(t.colored_total + uncolored, plane.order() + 1);
    EXPECT_EQ(std::accumulate(t.counts.begin(), t.counts.end(), 0u), t.colored_total);
  }
}

TEST(Coloring, L1Distance) {
  LineType a{{1, 2, 0}, 3}, b{{0, 2, 1}, 3};
  EXPECT_EQ(l1_distance(a, b), 2u);
  EXPECT_THROW(l1_distance(a, LineType{{1}, 1}), std::invalid_argument);
}

TEST(Coloring, MonochromeIsAllBad) {
  const auto plane = build_pg2(2);
  const PartialColoring mono(1, std::vector<Color>(7, 1));
  EXPECT_EQ(find_bad_pairs(plane, mono).size(), 21u);
}

TEST(Coloring, BadPairsRequireTotal) {
  const auto plane = build_pg2(2);
  EXPECT_THROW(find_bad_pairs(plane, PartialColoring(3, 7)), std::invalid_argument);
}

TEST(Coloring, BadPairsMatchBruteForce) {
  const auto plane = build_pg2(4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = random_total(plane, 3, seed);
    std::vector<LinePair> expected;
    for (LineId i = 0; i < plane.num_lines(); ++i)
      for (LineId j = i + 1; j < plane.num_lines(); ++j)
        if (line_type(plane, c, i) == line_type(plane, c, j)) expected.emplace_back(i, j);
    EXPECT_EQ(find_bad_pairs(plane, c), expected);
  }
}

TEST(Coloring, BadPairsAreDangerous) {
  const auto plane = build_pg2(7);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = random_total(plane, 4, seed);
    const auto bad = find_bad_pairs(plane, c);
    const auto dangerous = find_dangerous_pairs(plane, c);
    const std::set<LinePair> dset(dangerous.begin(), dangerous.end());
    for (const auto& p : bad) EXPECT_TRUE(dset.count(p));
  }
}

TEST(Coloring, ColorPermutationPreservesBadPairs) {
  const auto plane = build_pg2(5);
  const std::vector<Color> perm{0, 3, 1, 4, 2};  // perm[c] for c = 1..4
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = random_total(plane, 4, seed);
    std::vector<Color> relabeled(c.assignment());
    for (auto& x : relabeled) x = perm[x];
    EXPECT_EQ(find_bad_pairs(plane, c), find_bad_pairs(plane, PartialColoring(4, relabeled)));
  }
}

TEST(Coloring, DangerousThresholdTiesCount) {
  const auto plane = build_pg2(2);
  PartialColoring c(2, std::vector<Color>{1, 1, 1, 2, 2, 2, 2});
  const auto t0 = line_type(plane, c, 0), t1 = line_type(plane, c, 1);
  const double dist = static_cast<double>(l1_distance(t0, t1));
  const auto at = find_dangerous_pairs(plane, c, dist);
  const auto below = find_dangerous_pairs(plane, c, dist - 0.5);
  EXPECT_TRUE(std::count(at.begin(), at.end(), LinePair{0, 1}));
  EXPECT_FALSE(std::count(below.begin(), below.end(), LinePair{0, 1}));
  EXPECT_NEAR(dangerous_threshold(9), 22 * std::log(9.0), 1e-12);
}

TEST(SSet, WindowEnforced) {
  const auto plane = build_pg2(3);
  EXPECT_THROW(SSet::make(plane, {0}), std::invalid_argument);
  std::vector<PointId> all(plane.num_points());
  std::iota(all.begin(), all.end(), 0);
  const auto s = SSet::make(plane, all);
  EXPECT_EQ(s.size(), 13u);
  EXPECT_EQ(s.line_count(0), 4u);
  EXPECT_THROW(SSet::make(plane, {99}), std::invalid_argument);
  const auto [lo, hi] = sset_window(3);
  EXPECT_NEAR(lo, std::log(3.0), 1e-12);
  EXPECT_NEAR(hi, 11 * std::log(3.0), 1e-12);
}

TEST(SSet, SampleIsDeterministicAndValid) {
  const auto plane = build_pg2(16);
  Rng r1(42), r2(42);
  const auto a = sample_S(plane, r1, default_inclusion_prob(16), 100);
  const auto b = sample_S(plane, r2, default_inclusion_prob(16), 100);
  EXPECT_EQ(a.set.members(), b.set.members());
  const auto [lo, hi] = sset_window(16);
  for (LineId l = 0; l < plane.num_lines(); ++l) {
    EXPECT_GE(a.set.line_count(l), lo);
    EXPECT_LE(a.set.line_count(l), hi);
  }
  EXPECT_NEAR(sset_size_bound(9), 91 * 11 * std::log(9.0) / 10, 1e-9);
}

TEST(SSet, SampleFailsAndRejects) {
  const auto plane = build_pg2(5);
  Rng rng(1);
  EXPECT_THROW(sample_S(plane, rng, 0.0, 5), Infeasible);
  EXPECT_THROW(sample_S(plane, rng, 1.5, 5), std::invalid_argument);
}

TEST(SamplePartial, ExtremesAndDeterminism) {
  const auto plane = build_pg2(3);
  std::vector<PointId> all(13);
  std::iota(all.begin(), all.end(), 0);
  Rng r1(5), r2(5), r3(5);
  EXPECT_EQ(sample_partial(plane, all, 4, r1).uncolored().size(), 13u);
  const auto t1 = sample_partial(plane, {}, 4, r2);
  EXPECT_TRUE(t1.is_total());
  EXPECT_EQ(t1, sample_partial(plane, {}, 4, r3));
}

TEST(DegreeCaps, CountsOnSmallPlane) {
  const auto plane = build_pg2(3);
  std::vector<PointId> all(13);
  std::iota(all.begin(), all.end(), 0);
  const auto s = SSet::make(plane, all);
  const PartialColoring empty(4, 13);
  // Every pair is dangerous: each line has 12 partners, each point lies on 4 involved lines.
  const auto r = fact2_check(plane, empty, s, 12, 4);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.dangerous_pairs, 78u);
  EXPECT_EQ(r.worst_line_degree, 12u);
  EXPECT_EQ(r.worst_point_lines, 4u);
  EXPECT_FALSE(fact2_check(plane, empty, s, 11, 4).pass);
  EXPECT_FALSE(fact2_check(plane, empty, s, 12, 3).pass);
  EXPECT_THROW(fact2_check(plane, PartialColoring(4, std::vector<Color>(13, 1)), s, 12, 4), std::invalid_argument);
}

TEST(ColoringIo, RoundTrips) {
  PartialColoring c(5, std::vector<Color>{1, 0, 5, 2});
  std::stringstream ss;
  write_coloring_json(c, ss);
  EXPECT_NE(ss.str().find("null"), std::string::npos);
  EXPECT_EQ(read_coloring_json(ss), c);
  std::stringstream s2;
  write_sset_json({1, 4, 9}, s2);
  EXPECT_EQ(read_sset_json(s2), (std::vector<PointId>{1, 4, 9}));
  std::stringstream bad("{\"d\": 2, \"assignment\": [3]}");
  EXPECT_THROW(read_coloring_json(bad), ParseError);
}
