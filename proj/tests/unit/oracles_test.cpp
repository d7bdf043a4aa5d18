#include <gtest/gtest.h>

#include <cstdlib>

#include "burnlab/burn.hpp"
#include "burnlab/errors.hpp"
#include "burnlab/oracles.hpp"
#include "support/corpus.hpp"

namespace burnlab {
namespace {

using testing::cycle_graph;
using testing::path_graph;

UndirectedGraph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<VertexId>(i));
  return UndirectedGraph(leaves + 1, edges);
}

// Brute force over every ordered source tuple, for cross-checking the search.
std::int64_t brute_force(const UndirectedGraph& g) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (std::size_t len = 1;; ++len) {
    std::vector<VertexId> pick(len, 0);
    for (;;) {
      if (validate(g, BurningSchedule{pick}).accepted()) return static_cast<std::int64_t>(len);
      std::size_t i = 0;
      while (i < len && ++pick[i] == n) pick[i++] = 0;
      if (i == len) break;
    }
  }
}

TEST(ExactOracle, SingleVertex) {
  const auto r = exact_burning_number(UndirectedGraph(1, {}));
  EXPECT_EQ(r.b, 1);
  EXPECT_EQ(r.witness.sources, std::vector<VertexId>{0});
}

TEST(ExactOracle, PathOnFour) {
  const auto g = path_graph(4);
  const auto r = exact_burning_number(g);
  EXPECT_EQ(r.b, 2);
  EXPECT_TRUE(validate(g, r.witness).accepted());
  EXPECT_EQ(r.witness.length(), 2u);
}

TEST(ExactOracle, CycleOfNine) { EXPECT_EQ(exact_burning_number(cycle_graph(9)).b, 3); }

TEST(ExactOracle, StarNeedsTwo) { EXPECT_EQ(exact_burning_number(star(4)).b, 2); }

TEST(ExactOracle, KnownPathValues) {
  // b(P_n) = ceil(sqrt(n)).
  const std::int64_t expect[] = {0, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4};
  for (std::size_t n = 1; n <= 14; ++n) EXPECT_EQ(exact_burning_number(path_graph(n)).b, expect[n]) << "n=" << n;
}

TEST(ExactOracle, DirectedOutStar) {
  const DirectedTree t(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto r = exact_burning_number(t);
  EXPECT_EQ(r.b, 2);
  EXPECT_TRUE(validate(t, r.witness).accepted());
}

TEST(ExactOracle, DirectedChainNeedsMoreThanUndirected) {
  // 0->1->2->3: the fire only travels forward.
  const DirectedTree t(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(exact_burning_number(t).b, 3);
  EXPECT_EQ(exact_burning_number(path_graph(4)).b, 2);
  // Two roots feeding one sink: both roots must be sources.
  const DirectedTree v(3, {{0, 2}, {1, 2}});
  EXPECT_EQ(exact_burning_number(v).b, 2);
}

TEST(ExactOracle, WitnessIsOptimalAgainstBruteForce) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto g = testing::small_cactus(seed);
    if (g.vertex_count() > 9) continue;
    const auto r = exact_burning_number(g);
    EXPECT_TRUE(validate(g, r.witness).accepted()) << "seed " << seed;
    EXPECT_EQ(static_cast<std::int64_t>(r.witness.length()), r.b);
    EXPECT_EQ(r.b, brute_force(g)) << "seed " << seed;
  }
}

TEST(ExactOracle, RejectsGraphsAboveCap) {
  ExactOptions opts;
  opts.max_vertices = 5;
  EXPECT_THROW(exact_burning_number(path_graph(6), opts), InvalidInput);
  EXPECT_NO_THROW(exact_burning_number(path_graph(5), opts));
}

TEST(ExactOracle, BudgetExceeded) {
  ExactOptions opts;
  opts.expansion_budget = 10;
  EXPECT_THROW(exact_burning_number(path_graph(12), opts), BudgetExceeded);
}

TEST(ExactOracle, CapFromEnvironment) {
  ::setenv("BURNLAB_ORACLE_CAP", "9", 1);
  EXPECT_EQ(oracle_vertex_cap(), 9u);
  ::setenv("BURNLAB_ORACLE_CAP", "junk", 1);
  EXPECT_EQ(oracle_vertex_cap(), 14u);
  ::unsetenv("BURNLAB_ORACLE_CAP");
  EXPECT_EQ(oracle_vertex_cap(), 14u);
}

TEST(CycleFormula, Values) {
  EXPECT_EQ(cycle_formula(9), 3);
  EXPECT_EQ(cycle_formula(3), 2);
  EXPECT_EQ(cycle_formula(4), 2);
  EXPECT_EQ(cycle_formula(10), 4);
  EXPECT_EQ(cycle_formula(1'000'000), 1000);
  EXPECT_EQ(cycle_formula(1'000'001), 1001);
  EXPECT_THROW(cycle_formula(2), InvalidInput);
}

TEST(CycleFormula, MatchesOracle) {
  for (std::int64_t n = 3; n <= 14; ++n) {
    EXPECT_EQ(cycle_formula(n), exact_burning_number(cycle_graph(static_cast<std::size_t>(n))).b) << n;
  }
}

TEST(Baseline, PathOnFourGuesses) {
  const auto g = path_graph(4);
  EXPECT_TRUE(is_bad_guess(baseline_guess(g, 1)));
  const auto ok = baseline_guess(g, 2);
  ASSERT_FALSE(is_bad_guess(ok));
  const auto& sets = std::get<CenterSets>(ok);
  ASSERT_EQ(sets.groups.size(), 1u);
  EXPECT_EQ(sets.groups[0].centers, (std::vector<VertexId>{0, 3}));
  EXPECT_EQ(sets.groups[0].radius, 2);
}

TEST(Baseline, SingleVertex) {
  const auto r = baseline_3approx(UndirectedGraph(1, {}));
  EXPECT_EQ(r.schedule.length(), 1u);
  EXPECT_EQ(r.b_star, 1);
}

TEST(Baseline, WithinThreeOfExactOnCacti) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = testing::small_cactus(seed);
    const auto exact = exact_burning_number(g).b;
    const auto r = baseline_3approx(g);
    EXPECT_TRUE(validate(g, r.schedule).accepted()) << seed;
    EXPECT_LE(static_cast<std::int64_t>(r.schedule.length()), 3 * exact) << seed;
    for (std::int64_t b = 1; b <= exact + 2; ++b) {
      if (is_bad_guess(baseline_guess(g, b))) EXPECT_GE(exact, b + 1) << seed;
    }
  }
}

TEST(Baseline, RequiresConnectedGraph) {
  EXPECT_THROW(baseline_3approx(UndirectedGraph(2, {})), InvalidInput);
}

}  // namespace
}  // namespace burnlab
