#pragma once

// Ground truth for small graphs plus the classic 3-approximation baseline.

#include <cstdint>
#include <cstddef>

#include "burnlab/burn.hpp"
#include "burnlab/graph.hpp"

namespace burnlab {

struct ExactResult {
  std::int64_t b = 0;
  BurningSchedule witness;  // validates with length b
  std::uint64_t states_expanded = 0;
};

// Vertex cap for exhaustive search: BURNLAB_ORACLE_CAP if set, else 14.
std::size_t oracle_vertex_cap();

struct ExactOptions {
  std::size_t max_vertices = oracle_vertex_cap();
  std::uint64_t expansion_budget = 200'000'000;
};

// Smallest schedule length that burns everything. Throws InvalidInput when
// the graph exceeds max_vertices and BudgetExceeded when the search expands
// more than expansion_budget (state, source) pairs. Directed input spreads
// along arcs only.
ExactResult exact_burning_number(const UndirectedGraph& g, const ExactOptions& options = {});
ExactResult exact_burning_number(const DirectedTree& t, const ExactOptions& options = {});

// Burning number of the n-cycle, ceil(sqrt(n)). Requires n >= 3.
std::int64_t cycle_formula(std::int64_t n);

// One guess of the baseline: smallest-id unmarked vertex becomes a center and
// marks its (2b-2)-ball. More than b centers means b(G) > b, since they are
// pairwise at least 2b-1 apart. Success carries {(centers, 2b-2)}.
GuessOutcome baseline_guess(const UndirectedGraph& g, std::int64_t b);

// Linear search over b; schedule length <= 3 b_star - 2.
ApproxResult baseline_3approx(const UndirectedGraph& g);

}  // namespace burnlab
