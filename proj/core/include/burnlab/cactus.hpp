#pragma once

// 2.75-approximation for burning cactus graphs.
//
// Per guess b the procedure keeps two range budgets: ceil(b/4) wide ranges
// of radius ceil(1.75b) that go to cut vertices found between the current
// farthest unmarked vertex f and the root, and ceil(3b/4) ranges of radius
// 2b-2 centered on f itself. Running out of the budget that is needed means
// the graph cannot burn in b rounds.

#include <cstdint>
#include <optional>
#include <vector>

#include "burnlab/burn.hpp"
#include "burnlab/graph.hpp"

namespace burnlab {

// Per-graph precomputation shared by every guess. Holds root distances and
// each vertex's next separator on the way to the root.
class CactusContext {
 public:
  // Root = smallest-id articulation point. Throws InvalidInput if g is not a
  // connected cactus or has no articulation point.
  explicit CactusContext(const UndirectedGraph& g);
  // Explicit root; it need not be an articulation point.
  CactusContext(const UndirectedGraph& g, VertexId root);

  const UndirectedGraph& graph() const noexcept { return *g_; }
  VertexId root() const noexcept { return root_; }
  std::int32_t depth(VertexId v) const { return depth_[v]; }
  // Next vertex toward the root that every v-root path crosses; -1 at root.
  VertexId toward_root(VertexId v) const { return toward_root_[v]; }
  // All vertices, farthest from the root first, ties by smallest id.
  const std::vector<VertexId>& by_depth() const noexcept { return by_depth_; }

 private:
  void build(VertexId root);

  const UndirectedGraph* g_;
  VertexId root_ = -1;
  std::vector<std::int32_t> depth_;
  std::vector<VertexId> toward_root_;
  std::vector<VertexId> by_depth_;
};

// The separator v_k between f and the root (the root itself included) with
// ceil(b/4) <= d(f, v_k) <= ceil(1.75b); the farthest such one from f.
std::optional<VertexId> articulation_on_path(const CactusContext& ctx, VertexId f, std::int64_t b);
std::optional<VertexId> articulation_on_path(const UndirectedGraph& g, VertexId f, VertexId r,
                                             std::int64_t b);

struct CactusGuessOptions {
  // Verify N_{2b-2}[f] ∩ unmarked ⊆ N_{ceil(1.75b)}[v_k] at each wide-range pick.
  bool check_inclusion = false;
};

struct CactusGuess {
  GuessOutcome outcome;
  std::vector<VertexId> wide_centers;    // radius ceil(1.75b), cut vertices
  std::vector<VertexId> narrow_centers;  // radius max(2b-2, 0), farthest vertices
  std::size_t inclusion_checks = 0;
  std::size_t inclusion_violations = 0;
};

CactusGuess burn_guess_cactus(const CactusContext& ctx, std::int64_t b,
                              const CactusGuessOptions& options = {});
CactusGuess burn_guess_cactus(const UndirectedGraph& g, std::int64_t b,
                              const CactusGuessOptions& options = {});

// Tries b = 1, 2, ... and assembles the first success into a schedule of at
// most ceil(2.75 b_star) sources. A single cycle (no articulation point) is
// burned directly with ceil(sqrt(n)) sources.
ApproxResult approx_cactus(const UndirectedGraph& g);

// Optimal schedule for a graph that is one cycle.
BurningSchedule burn_cycle(const UndirectedGraph& g);

}  // namespace burnlab
