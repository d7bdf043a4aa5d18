#include <gtest/gtest.h>

#include <set>

#include "burnlab/ditree.hpp"
#include "burnlab/errors.hpp"
#include "burnlab/oracles.hpp"
#include "support/corpus.hpp"

namespace burnlab {
namespace {

// a=0 -> b=1 -> c=2 -> d=3
DirectedTree chain(std::size_t n) {
  std::vector<Edge> arcs;
  for (std::size_t i = 0; i + 1 < n; ++i) arcs.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  return DirectedTree(n, arcs);
}

DirectedTree out_star(std::size_t leaves) {
  std::vector<Edge> arcs;
  for (std::size_t i = 1; i <= leaves; ++i) arcs.emplace_back(0, static_cast<VertexId>(i));
  return DirectedTree(leaves + 1, arcs);
}

const DirectedTree kVee(3, {{0, 2}, {1, 2}});  // r1 -> x <- r2

std::vector<VertexId> ids(const CutTree& t) { return t.vertices(); }

TEST(BCutting, Chain) {
  const auto t = chain(4);
  EXPECT_EQ(ids(b_cutting(t, 0)), (std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_EQ(ids(b_cutting(t, 1)), (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(ids(b_cutting(t, 3)), (std::vector<VertexId>{0}));
  EXPECT_EQ(ids(b_cutting(t, 10)), (std::vector<VertexId>{0}));
}

TEST(BCutting, MultiParentVertexStays) {
  EXPECT_EQ(ids(b_cutting(kVee, 5)), (std::vector<VertexId>{0, 1, 2}));
}

TEST(BCutting, RemovalIsSimultaneous) {
  // 0 -> 1 -> 2 and 0 -> 3: one round removes 2 and 3 only.
  const DirectedTree t(4, {{0, 1}, {1, 2}, {0, 3}});
  const CutTree once = b_cutting(t, 1);
  EXPECT_EQ(ids(once), (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(once.out_degree(0), 1);
  EXPECT_EQ(once.out_degree(1), 0);
}

TEST(BCutting, Composes) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto t = seed % 2 ? testing::small_polytree(seed) : testing::small_arborescence(seed);
    for (int a = 0; a <= 4; ++a) {
      for (int c = 0; c <= 4; ++c) EXPECT_TRUE(b_cutting(t, a + c) == b_cutting(b_cutting(t, a), c));
    }
  }
}

TEST(CentersMultirooted, SingleVertex) {
  const PolytreeGuess g = centers_multirooted(DirectedTree(1, {}), 1);
  ASSERT_FALSE(is_bad_guess(g.outcome));
  EXPECT_EQ(g.centers.single_parent, std::vector<VertexId>{0});
  EXPECT_TRUE(g.centers.multi_parent.empty());
}

TEST(CentersMultirooted, OutStarAtOneIsBad) {
  const auto t = out_star(3);
  const PolytreeGuess g = centers_multirooted(t, 1);
  ASSERT_TRUE(is_bad_guess(g.outcome));
  EXPECT_EQ(std::get<BadGuess>(g.outcome).reason, BadGuess::Reason::kTooManyCenters);
  EXPECT_EQ(exact_burning_number(t).b, 2);
}

TEST(CentersMultirooted, MergeVertexGoesToMultiParentSet) {
  // r1 -> x <- r2, x -> y -> z. At b = 2, cutting once drops z; y is then a
  // single-parent sink. At b = 3 the sink after cutting is x itself.
  const DirectedTree t(5, {{0, 2}, {1, 2}, {2, 3}, {3, 4}});
  const PolytreeGuess g = centers_multirooted(t, 3);
  EXPECT_EQ(g.centers.multi_parent, std::vector<VertexId>{2});
}

TEST(CentersMultirooted, ArborescenceNeverUsesMultiParentSet) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto t = testing::small_arborescence(seed);
    for (std::int64_t b = 1; b <= 4; ++b) EXPECT_TRUE(centers_multirooted(t, b).centers.multi_parent.empty());
  }
}

TEST(CentersMultirooted, RejectsNonPolytree) {
  EXPECT_THROW(centers_multirooted(DirectedTree(2, {{0, 1}, {1, 0}}), 1), InvalidInput);
  EXPECT_THROW(centers_multirooted(chain(3), 0), InvalidInput);
}

TEST(CentersMultirooted, BadGuessIsSound) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto t = testing::small_polytree(seed);
    const auto exact = exact_burning_number(t).b;
    for (std::int64_t b = 1; b <= exact + 2; ++b) {
      if (is_bad_guess(centers_multirooted(t, b).outcome)) EXPECT_GE(exact, b + 1) << "seed " << seed;
    }
  }
}

TEST(ApproxPolytree, Small) {
  const auto one = approx_polytree(DirectedTree(1, {}));
  EXPECT_EQ(one.schedule.length(), 1u);
  const auto c3 = chain(3);
  const auto r = approx_polytree(c3);
  EXPECT_TRUE(validate(c3, r.schedule).accepted());
  EXPECT_LE(static_cast<std::int64_t>(r.schedule.length()), 3 * exact_burning_number(c3).b);
}

TEST(ApproxPolytree, SeededInstance) {
  GenSpec spec;
  spec.cls = GraphClass::kPolytree;
  spec.n = 12;
  spec.seed = 3;
  const auto t = random_polytree(spec);
  const auto r = approx_polytree(t);
  EXPECT_TRUE(validate(t, r.schedule).accepted());
  EXPECT_LE(static_cast<std::int64_t>(r.schedule.length()), 3 * exact_burning_number(t).b);
  EXPECT_LE(static_cast<std::int64_t>(r.schedule.length()), r.bound);
}

TEST(CentersSinglerooted, ChainOfFour) {
  EXPECT_EQ(centers_singlerooted(chain(4), 2), (std::vector<VertexId>{2, 0}));
}

TEST(CentersSinglerooted, SmallCases) {
  EXPECT_EQ(centers_singlerooted(DirectedTree(1, {}), 5), std::vector<VertexId>{0});
  const DirectedTree binary(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  EXPECT_EQ(centers_singlerooted(binary, 3), std::vector<VertexId>{0});
  EXPECT_THROW(centers_singlerooted(kVee, 2), InvalidInput);
}

TEST(CentersSinglerooted, DisjointShallowSubtreesCoverTree) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto t = testing::small_arborescence(seed);
    for (std::int64_t b = 1; b <= 4; ++b) {
      const auto centers = centers_singlerooted(t, b);
      // Each vertex belongs to the nearest center above it; it must lie
      // within b-1 hops.
      std::set<VertexId> is_center(centers.begin(), centers.end());
      for (VertexId v = 0; v < static_cast<VertexId>(t.vertex_count()); ++v) {
        VertexId x = v;
        std::int64_t hops = 0;
        while (!is_center.count(x)) {
          ASSERT_EQ(t.in_neighbors(x).size(), 1u) << "vertex above every center, seed " << seed;
          x = t.in_neighbors(x)[0];
          ++hops;
        }
        EXPECT_LE(hops, b - 1) << "seed " << seed << " b " << b;
      }
    }
  }
}

TEST(CentersSinglerooted, Limit) {
  const auto t = out_star(6);
  EXPECT_EQ(centers_singlerooted(t, 1).size(), 7u);
  EXPECT_LE(centers_singlerooted(t, 1, 2).size(), 7u);
  EXPECT_GT(centers_singlerooted(t, 1, 2).size(), 2u);
}

TEST(RangeBudget, TakesSmallestQualifying) {
  RangeBudget budget(4);
  EXPECT_EQ(budget.size(), 5u);
  EXPECT_EQ(budget.take_at_least(2), 2);
  EXPECT_EQ(budget.take_at_least(2), 3);
  EXPECT_TRUE(budget.has_at_least(4));
  EXPECT_EQ(budget.take_at_least(2), 4);
  EXPECT_FALSE(budget.has_at_least(2));
  EXPECT_FALSE(budget.take_at_least(2).has_value());
  EXPECT_EQ(budget.take_at_least(0), 0);
}

TEST(LcaLength, Examples) {
  const DirectedTree fork(3, {{0, 1}, {0, 2}});
  EXPECT_EQ(lca_length(fork, 1, 2), 1);
  EXPECT_EQ(lca_length(chain(4), 0, 3), 3);
  // Root 0 with branches of length 3 and 5.
  const DirectedTree uneven(9, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});
  EXPECT_EQ(lca_length(uneven, 3, 8), 5);
  EXPECT_FALSE(lca_length(kVee, 0, 1).has_value());
}

TEST(MergeAndBurn, TwoChainsMergeAtRoot) {
  // r -> u -> u', r -> v -> v'; b = 2, centers u and v.
  const DirectedTree t(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}});
  const MergeResult r = merge_and_burn(t, 2, {1, 3});
  ASSERT_FALSE(is_bad_guess(r.outcome));
  EXPECT_EQ(r.plan.merge_roots, std::vector<VertexId>{0});
  EXPECT_TRUE(r.plan.unmerged.empty());
  EXPECT_EQ(r.plan.consumed_ranges, std::vector<std::int64_t>{4});
  EXPECT_EQ(r.plan.max_range, 4);
  const auto& sets = std::get<CenterSets>(r.outcome);
  EXPECT_EQ(sets.groups[0].radius, 4);
  EXPECT_EQ(sets.groups[1].radius, 2);
}

TEST(MergeAndBurn, SingleCenterTakesSmallestRange) {
  const MergeResult r = merge_and_burn(chain(3), 3, {0});
  ASSERT_FALSE(is_bad_guess(r.outcome));
  EXPECT_EQ(r.plan.unmerged, std::vector<VertexId>{0});
  EXPECT_EQ(r.plan.consumed_ranges, std::vector<std::int64_t>{3});
}

TEST(MergeAndBurn, UnmergeableCentersExhaustBudget) {
  // b = 1: ranges {0, 1, 2}; every pair of leaves of a deep fan sits too far
  // apart to merge (reach 1) and only two ranges are >= 1.
  const DirectedTree t(10, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 7}, {7, 8}, {8, 9}});
  const MergeResult r = merge_and_burn(t, 1, {3, 6, 9});
  ASSERT_TRUE(is_bad_guess(r.outcome));
  EXPECT_EQ(std::get<BadGuess>(r.outcome).reason, BadGuess::Reason::kRangeBudgetExhausted);
  EXPECT_GE(exact_burning_number(t).b, 2);
}

TEST(MergeAndBurn, ConservesCentersAndCoversMergedSubtrees) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const auto t = testing::small_arborescence(seed);
    for (std::int64_t b = 1; b <= 4; ++b) {
      const auto centers = centers_singlerooted(t, b);
      const MergeResult r = merge_and_burn(t, b, centers);
      if (is_bad_guess(r.outcome)) continue;
      const auto& p = r.plan;
      EXPECT_EQ(p.unmerged.size() + 2 * p.merge_roots.size(), centers.size());
      std::set<std::int64_t> distinct(p.consumed_ranges.begin(), p.consumed_ranges.end());
      EXPECT_EQ(distinct.size(), p.consumed_ranges.size());
      const std::int64_t radius = ceil_range(b, coeff::kMergeRange);
      for (std::size_t i = 0; i < p.merge_roots.size(); ++i) {
        const auto d = bfs_distances(t, p.merge_roots[i]);
        for (VertexId c : {p.merged_pairs[i].first, p.merged_pairs[i].second}) {
          // c's subtree has height <= b - 1.
          EXPECT_TRUE(d.within(c, radius - (b - 1))) << "seed " << seed;
        }
      }
      const auto s = assemble(t, std::get<CenterSets>(r.outcome), static_cast<std::size_t>(p.max_range + 1));
      EXPECT_TRUE(validate(t, s).accepted());
    }
  }
}

TEST(GuessArborescence, BadGuessIsSound) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto t = testing::small_arborescence(seed);
    const auto exact = exact_burning_number(t).b;
    for (std::int64_t b = 1; b <= exact + 2; ++b) {
      if (is_bad_guess(guess_arborescence(t, b).outcome)) EXPECT_GE(exact, b + 1) << "seed " << seed;
    }
  }
}

TEST(ApproxArborescence, ChainOfTen) {
  const auto t = chain(10);
  const auto r = approx_arborescence(t);
  EXPECT_TRUE(validate(t, r.schedule).accepted());
  EXPECT_LE(static_cast<std::int64_t>(r.schedule.length()),
            ceil_range(exact_burning_number(t).b, coeff::kArborescenceFactor) + 1);
}

TEST(ApproxArborescence, SeededInstanceAgainstTwoApprox) {
  GenSpec spec;
  spec.cls = GraphClass::kArborescence;
  spec.n = 14;
  spec.seed = 9;
  const auto t = random_arborescence(spec);
  const auto exact = exact_burning_number(t).b;
  const auto fast = approx_arborescence(t);
  const auto two = approx_polytree(t);
  EXPECT_TRUE(validate(t, fast.schedule).accepted());
  EXPECT_TRUE(validate(t, two.schedule).accepted());
  EXPECT_LE(static_cast<std::int64_t>(fast.schedule.length()), ceil_range(exact, coeff::kArborescenceFactor) + 1);
  EXPECT_LE(static_cast<std::int64_t>(two.schedule.length()), 2 * exact);
}

TEST(ApproxArborescence, SingleVertexAndRejects) {
  EXPECT_EQ(approx_arborescence(DirectedTree(1, {})).schedule.sources, std::vector<VertexId>{0});
  EXPECT_THROW(approx_arborescence(kVee), InvalidInput);
}

TEST(SCertificate, MiddleOfElevenPath) {
  std::vector<VertexId> path;
  for (VertexId v = 12; v <= 22; ++v) path.push_back(v);
  EXPECT_EQ(middle_subpath(path, 11), (std::vector<VertexId>{15, 16, 17, 18, 19}));
  EXPECT_TRUE(middle_subpath({1, 2}, 11).empty());
}

TEST(SCertificate, Counts) {
  const auto one = s_certificate(DirectedTree(1, {}), 1, {});
  EXPECT_EQ(one.s_b, 1);
  EXPECT_EQ(one.s_size, 0);
  EXPECT_FALSE(one.exceeds());

  // Chain of 22 at b = 11: centers 11 and 0, each rooting an 11-vertex path.
  const auto t = chain(22);
  const auto centers = centers_singlerooted(t, 11);
  ASSERT_EQ(centers, (std::vector<VertexId>{11, 0}));
  const auto cert = s_certificate(t, 11, centers);
  EXPECT_EQ(cert.s_b, 66);
  ASSERT_EQ(cert.middle_paths.size(), 2u);
  EXPECT_EQ(cert.middle_paths[0], (std::vector<VertexId>{14, 15, 16, 17, 18}));
  EXPECT_EQ(cert.s_size, 10);
  EXPECT_THROW(s_certificate(t, 11, {5}), InvalidInput);
}

}  // namespace
}  // namespace burnlab
