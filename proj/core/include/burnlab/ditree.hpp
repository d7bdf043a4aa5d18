#pragma once

// Burning directed trees.
//
// b-cutting peels, round by round, every vertex with out-degree 0 and
// in-degree 1. After b-1 rounds the surviving sinks root height-(b-1)
// subtrees; they become fire centers. That alone gives a 3-approximation on
// polytrees and a 2-approximation on arborescences.
//
// Merging pairs of centers through a nearby lowest common ancestor improves
// arborescences to ceil(1.905b) + 1 sources.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "burnlab/burn.hpp"
#include "burnlab/graph.hpp"

namespace burnlab {

// A surviving vertex subset of a DirectedTree with degrees counted inside
// the subset. Holds a pointer to the tree, which must outlive it.
class CutTree {
 public:
  explicit CutTree(const DirectedTree& t);

  const DirectedTree& tree() const noexcept { return *tree_; }
  bool contains(VertexId v) const { return alive_[v] != 0; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::int32_t in_degree(VertexId v) const { return in_[v]; }
  std::int32_t out_degree(VertexId v) const { return out_[v]; }
  // Surviving vertices, ascending.
  std::vector<VertexId> vertices() const;

  void remove(VertexId v);

  friend bool operator==(const CutTree& a, const CutTree& b) {
    return a.tree_ == b.tree_ && a.alive_ == b.alive_;
  }

 private:
  const DirectedTree* tree_;
  std::vector<char> alive_;
  std::vector<std::int32_t> in_;
  std::vector<std::int32_t> out_;
  std::size_t size_ = 0;
};

// `rounds` rounds of simultaneous removal of vertices with out-degree 0 and
// in-degree 1. Zero rounds returns the input unchanged.
CutTree b_cutting(const CutTree& t, std::int64_t rounds);
CutTree b_cutting(const DirectedTree& t, std::int64_t rounds);

struct DitreeCenters {
  std::vector<VertexId> single_parent;  // BS: in-degree <= 1 when picked
  std::vector<VertexId> multi_parent;   // BS': in-degree >= 2 when picked
};

struct PolytreeGuess {
  GuessOutcome outcome;
  DitreeCenters centers;
};

// Center extraction for polytrees, at most b cutting rounds. Success carries
// {(BS', b), (BS, b)}. Throws InvalidInput if t is not a polytree.
PolytreeGuess centers_multirooted(const DirectedTree& t, std::int64_t b);

// Linear search over b; schedule length <= |BS| + |BS'| + b_star <= 3 b_star.
// On an arborescence BS' stays empty and the bound becomes 2 b_star.
ApproxResult approx_polytree(const DirectedTree& t);

// Roots of the vertex-disjoint height-(b-1) subtrees of an arborescence, in
// emission order. With `limit`, stops once more than `limit` were found.
std::vector<VertexId> centers_singlerooted(const DirectedTree& t, std::int64_t b,
                                           std::optional<std::size_t> limit = std::nullopt);

// Ranges still available in a schedule: initially {0, 1, ..., max_range}.
class RangeBudget {
 public:
  explicit RangeBudget(std::int64_t max_range);
  // Removes and returns the smallest range >= threshold.
  std::optional<std::int64_t> take_at_least(std::int64_t threshold);
  bool has_at_least(std::int64_t threshold) const;
  std::size_t size() const noexcept { return available_.size(); }

 private:
  std::vector<std::int64_t> available_;  // sorted ascending
};

struct MergePlan {
  std::vector<VertexId> unmerged;                         // BS1, radius >= b
  std::vector<VertexId> merge_roots;                      // BS2, one LCA per merge
  std::vector<std::pair<VertexId, VertexId>> merged_pairs;  // parallel to merge_roots
  std::vector<std::int64_t> consumed_ranges;
  std::int64_t max_range = 0;  // ceil(1.905b)
};

struct MergeResult {
  GuessOutcome outcome;
  MergePlan plan;
};

// Pairs up centers whose LCA is within ceil(0.81b) of both and spends one
// range >= ceil(1.81b) per pair; every other center takes the smallest
// range >= b. Success carries {(BS2, ceil(1.81b)), (BS1, b)}.
MergeResult merge_and_burn(const DirectedTree& t, std::int64_t b, const std::vector<VertexId>& centers);

// max(d(lca, u), d(lca, v)); absent without a common ancestor.
std::optional<std::int64_t> lca_length(const DirectedTree& t, VertexId u, VertexId v);

// centers_singlerooted, the |BS| > b check, then merge_and_burn.
MergeResult guess_arborescence(const DirectedTree& t, std::int64_t b);

// Linear search over b; schedule length <= ceil(1.905 b_star) + 1.
ApproxResult approx_arborescence(const DirectedTree& t);

// Counting certificate over the middle parts of non-merged subtrees: each
// center's downward path of b vertices loses ceil(0.19b) vertices at both
// ends, and S is the union of what remains. S > b(b+1)/2 rules out burning
// in b rounds. Diagnostic only; the drivers never consult it.
struct SCertificate {
  std::int64_t b = 0;
  std::int64_t s_b = 0;
  std::int64_t s_size = 0;
  std::vector<std::vector<VertexId>> middle_paths;

  bool exceeds() const noexcept { return s_size > s_b; }
};

SCertificate s_certificate(const DirectedTree& t, std::int64_t b,
                           const std::vector<VertexId>& unmerged_centers);

// Middle part of one path after stripping ceil(0.19b) vertices from each end.
std::vector<VertexId> middle_subpath(const std::vector<VertexId>& path, std::int64_t b);

}  // namespace burnlab
