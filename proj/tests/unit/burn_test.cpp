#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "burnlab/burn.hpp"
#include "burnlab/errors.hpp"
#include "burnlab/oracles.hpp"
#include "support/corpus.hpp"

namespace burnlab {
namespace {

using testing::path_graph;

BurningSchedule S(std::vector<VertexId> v) { return BurningSchedule{std::move(v)}; }

TEST(CeilRange, ExactRationals) {
  EXPECT_EQ(ceil_range(11, coeff::kPathStrip), 3);
  EXPECT_EQ(ceil_range(4, coeff::kQuarter), 1);
  EXPECT_EQ(ceil_range(5, coeff::kSevenQuarters), 9);
  EXPECT_EQ(ceil_range(2, coeff::kElevenQuarters), 6);
  EXPECT_EQ(ceil_range(4, coeff::kElevenQuarters), 11);
  EXPECT_EQ(ceil_range(100, coeff::kMergeReach), 81);
  EXPECT_EQ(ceil_range(2, coeff::kMergeRange), 4);
  EXPECT_EQ(ceil_range(2, coeff::kArborescenceFactor), 4);
  EXPECT_EQ(ceil_range(200, coeff::kArborescenceFactor), 381);
  EXPECT_EQ(ceil_range(201, coeff::kArborescenceFactor), 383);
  EXPECT_EQ(ceil_range(7, Ratio{0, 1}), 0);
  EXPECT_THROW(ceil_range(0, coeff::kQuarter), InvalidInput);
}

TEST(Simulate, PathCoveredInTwo) {
  const auto r = simulate(path_graph(4), S({1, 3}));
  EXPECT_EQ(r.burned_count, 4u);
  EXPECT_EQ(r.rounds_to_cover, 2u);
}

TEST(Simulate, SingleVertex) {
  const auto r = simulate(UndirectedGraph(1, {}), S({0}));
  EXPECT_EQ(r.burned, std::vector<char>{1});
  EXPECT_EQ(r.rounds_to_cover, 1u);
}

TEST(Simulate, DirectedChainLateSourceHasRadiusZero) {
  // Source 0 is lit in the last round, so its fire never leaves it.
  const DirectedTree t(3, {{0, 1}, {1, 2}});
  const auto r = simulate(t, S({2, 0}));
  EXPECT_EQ(r.burned, (std::vector<char>{1, 0, 1}));
  EXPECT_FALSE(r.rounds_to_cover.has_value());
}

TEST(Simulate, RejectsBadSchedules) {
  EXPECT_THROW(simulate(path_graph(3), S({0, 0})), InvalidSchedule);
  EXPECT_THROW(simulate(path_graph(3), S({0, 7})), InvalidSchedule);
  EXPECT_THROW(simulate(path_graph(3), S({0, 2, 1})), InvalidSchedule);
}

TEST(Validate, Examples) {
  const auto p3 = path_graph(3);
  const Verdict one = validate(p3, S({1}));
  EXPECT_EQ(one.rule, Verdict::Rule::kVertexUnburned);
  EXPECT_EQ(one.describe(), "vertex 0 unburned");
  EXPECT_TRUE(validate(p3, S({0, 2})).accepted());
  // 0 is one hop from 1, lit one round later: still unburned when chosen.
  EXPECT_TRUE(validate(p3, S({1, 0})).accepted());
  const Verdict late = validate(path_graph(4), S({0, 3, 1}));
  EXPECT_EQ(late.rule, Verdict::Rule::kSourceAlreadyBurned);
  EXPECT_EQ(late.position, 2u);
  EXPECT_EQ(late.vertex, 1);
  EXPECT_EQ(validate(p3, S({0, 0})).rule, Verdict::Rule::kRepeatedSource);
  EXPECT_EQ(validate(p3, S({5})).rule, Verdict::Rule::kSourceOutOfRange);
}

TEST(Validate, AppendingUnburnedVertexKeepsValidity) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = testing::small_cactus(seed);
    const auto w = exact_burning_number(g).witness;
    // Drop the last source; anything unburned may then be appended.
    BurningSchedule prefix = w;
    prefix.sources.pop_back();
    if (prefix.sources.empty()) continue;
    const auto before = simulate(g, prefix);
    std::vector<VertexId> unburned;
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
      if (!before.burned[v]) unburned.push_back(v);
    }
    if (unburned.empty()) continue;
    BurningSchedule longer = prefix;
    longer.sources.push_back(unburned[rng() % unburned.size()]);
    const auto after = simulate(g, longer);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (before.burned[v]) EXPECT_TRUE(after.burned[v]);
    }
  }
}

TEST(Schedule, LineFormat) {
  EXPECT_EQ(to_line(S({3, 0, 12})), "3 0 12");
  EXPECT_EQ(parse_schedule(" 3\t0 12\n").sources, (std::vector<VertexId>{3, 0, 12}));
  EXPECT_THROW(parse_schedule("1 a"), InvalidInput);
  EXPECT_THROW(parse_schedule("-1"), InvalidInput);
}

TEST(Assemble, OrdersByRadiusAndFills) {
  // Path 0..9, one wide center and one narrow center.
  const auto g = path_graph(10);
  CenterSets sets;
  sets.groups.push_back({{8}, 2});
  sets.groups.push_back({{3}, 4});
  const auto s = assemble(g, sets, 6);
  ASSERT_GE(s.length(), 2u);
  EXPECT_EQ(s.sources[0], 3);
  EXPECT_EQ(s.sources[1], 8);
  EXPECT_TRUE(validate(g, s).accepted());
}

TEST(Assemble, EmptyGroupsSingleVertex) {
  const auto s = assemble(UndirectedGraph(1, {}), CenterSets{}, 1);
  EXPECT_EQ(s.sources, std::vector<VertexId>{0});
}

TEST(Assemble, InfeasibleRadius) {
  CenterSets sets;
  sets.groups.push_back({{0}, 3});
  EXPECT_THROW(assemble(path_graph(3), sets, 3), Infeasible);
  CenterSets too_many;
  too_many.groups.push_back({{0, 1, 2}, 0});
  EXPECT_THROW(assemble(path_graph(3), too_many, 2), Infeasible);
}

TEST(Assemble, SkipsCentersAlreadyOnFire) {
  // 2 sits one hop from 1 but its slot comes two rounds later, so it is
  // already burning and the slot goes to a filler.
  const auto g = path_graph(8);
  CenterSets sets;
  sets.groups.push_back({{1}, 4});
  sets.groups.push_back({{6}, 2});
  sets.groups.push_back({{2}, 0});
  const auto s = assemble(g, sets, 5);
  EXPECT_TRUE(validate(g, s).accepted());
  EXPECT_EQ(s.sources[0], 1);
  EXPECT_EQ(s.sources[1], 6);
  EXPECT_EQ(std::count(s.sources.begin(), s.sources.end(), 2), 0);
}

TEST(Assemble, TruncatesOnceCovered) {
  CenterSets sets;
  sets.groups.push_back({{1}, 1});
  const auto s = assemble(path_graph(3), sets, 5);
  EXPECT_EQ(s.sources, (std::vector<VertexId>{1, 0}));
}

TEST(Assemble, UncoveredIsInfeasible) {
  CenterSets sets;
  sets.groups.push_back({{0}, 0});
  EXPECT_THROW(assemble(path_graph(8), sets, 2), Infeasible);
}

TEST(Assemble, DirectedCenters) {
  const DirectedTree t(4, {{0, 1}, {0, 2}, {0, 3}});
  CenterSets sets;
  sets.groups.push_back({{0}, 1});
  const auto s = assemble(t, sets, 2);
  EXPECT_TRUE(validate(t, s).accepted());
  EXPECT_EQ(s.sources, (std::vector<VertexId>{0, 1}));
}

TEST(BadGuess, ReasonNames) {
  EXPECT_STREQ(to_string(BadGuess::Reason::kTooManyCenters), "too_many_centers");
  EXPECT_STREQ(to_string(BadGuess::Reason::kRangeBudgetExhausted), "range_budget_exhausted");
}

}  // namespace
}  // namespace burnlab
