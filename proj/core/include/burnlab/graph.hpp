#pragma once

// Graph representations and structural queries shared by every algorithm.
//
// Graphs are immutable once built. Algorithms keep their own overlay state
// (marked sets, surviving vertex sets) so one instance can be reused across
// many guesses of the burning number, and from several threads at once.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace burnlab {

using VertexId = std::int32_t;
using Edge = std::pair<VertexId, VertexId>;

class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  // Throws InvalidInput on out-of-range ids, self-loops or parallel edges.
  // Edge order is kept as given so the text format round-trips exactly.
  UndirectedGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Sorted ascending.
  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const;
  bool contains(VertexId v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < n_;
  }

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
};

// A simple digraph meant to hold a directed tree. Construction only checks
// ids, self-loops and repeated arcs; use classify_ditree() to find out
// whether it is a polytree or an arborescence.
class DirectedTree {
 public:
  DirectedTree() = default;
  DirectedTree(std::size_t vertex_count, std::vector<Edge> arcs);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Edge>& arcs() const noexcept { return arcs_; }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> in_neighbors(VertexId v) const {
    return {in_targets_.data() + in_offsets_[v], in_targets_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(VertexId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }
  // Vertices with in-degree 0, ascending.
  const std::vector<VertexId>& roots() const noexcept { return roots_; }
  bool contains(VertexId v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < n_;
  }

  friend bool operator==(const DirectedTree&, const DirectedTree&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> arcs_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<VertexId> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<VertexId> in_targets_;
  std::vector<VertexId> roots_;
};

// Neighbors that catch fire from v: every neighbor when undirected, the
// out-neighbors when directed.
inline std::span<const VertexId> spread_neighbors(const UndirectedGraph& g, VertexId v) {
  return g.neighbors(v);
}
inline std::span<const VertexId> spread_neighbors(const DirectedTree& t, VertexId v) {
  return t.out_neighbors(v);
}

template <class G>
concept BurnableGraph = requires(const G& g, VertexId v) {
  { g.vertex_count() } -> std::convertible_to<std::size_t>;
  { spread_neighbors(g, v) } -> std::convertible_to<std::span<const VertexId>>;
};

// Hop distances from one source. Unreachable vertices have no distance at
// all rather than a large number, so `within(v, r)` is false for them.
class DistanceMap {
 public:
  DistanceMap(VertexId source, std::vector<std::int32_t> hops)
      : source_(source), hops_(std::move(hops)) {}

  VertexId source() const noexcept { return source_; }
  std::size_t size() const noexcept { return hops_.size(); }
  bool reachable(VertexId v) const { return hops_[v] != kUnreachable; }
  std::optional<std::int32_t> at(VertexId v) const {
    if (hops_[v] == kUnreachable) return std::nullopt;
    return hops_[v];
  }
  bool within(VertexId v, std::int64_t radius) const {
    return hops_[v] != kUnreachable && hops_[v] <= radius;
  }

 private:
  static constexpr std::int32_t kUnreachable = -1;
  VertexId source_;
  std::vector<std::int32_t> hops_;
};

enum class Traversal { kDirected, kUndirected };

DistanceMap bfs_distances(const UndirectedGraph& g, VertexId source);
DistanceMap bfs_distances(const DirectedTree& t, VertexId source,
                          Traversal traversal = Traversal::kDirected);

// Radius-limited BFS that reuses its scratch arrays between calls; the
// per-call cost is proportional to the ball, not to |V|.
template <BurnableGraph G>
class BallScanner {
 public:
  explicit BallScanner(const G& g)
      : g_(&g), stamp_(g.vertex_count(), 0), hop_(g.vertex_count(), 0) {}

  // Calls visit(v, hop) for every v with d(center, v) <= radius, in BFS order.
  template <class Visit>
  void scan(VertexId center, std::int64_t radius, Visit&& visit) {
    if (radius < 0) return;
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    queue_.clear();
    queue_.push_back(center);
    stamp_[center] = epoch_;
    hop_[center] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const VertexId u = queue_[head];
      visit(u, hop_[u]);
      if (hop_[u] == radius) continue;
      for (VertexId w : spread_neighbors(*g_, u)) {
        if (stamp_[w] == epoch_) continue;
        stamp_[w] = epoch_;
        hop_[w] = hop_[u] + 1;
        queue_.push_back(w);
      }
    }
  }

  std::vector<VertexId> ball(VertexId center, std::int64_t radius) {
    std::vector<VertexId> out;
    scan(center, radius, [&](VertexId v, std::int64_t) { out.push_back(v); });
    return out;
  }

 private:
  const G* g_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::int64_t> hop_;
  std::vector<VertexId> queue_;
};

bool is_connected(const UndirectedGraph& g);

// Ascending list of cut vertices (iterative low-link DFS).
std::vector<VertexId> articulation_points(const UndirectedGraph& g);

// Biconnected blocks of a connected graph, seen from a DFS rooted at `root`.
struct BlockDecomposition {
  struct Block {
    std::vector<VertexId> vertices;
    std::size_t edge_count = 0;
    // The block's vertex nearest to the root: a cut vertex, or the root.
    VertexId head = -1;
  };
  VertexId root = -1;
  std::vector<Block> blocks;
  // toward_root[v] is the head of the block through which v is reached from
  // the root; -1 for the root itself. Following it from any vertex visits
  // exactly the vertices that separate it from the root.
  std::vector<VertexId> toward_root;
  std::vector<char> is_cut_vertex;
};

BlockDecomposition decompose_blocks(const UndirectedGraph& g, VertexId root);

// Eligible vertex with the largest distance from `source`; ties go to the
// smallest id. Unreachable vertices are never returned. Throws InvalidInput
// if nothing eligible is reachable.
VertexId farthest_from(const UndirectedGraph& g, VertexId source,
                       const std::function<bool(VertexId)>& eligible);

// Every biconnected block is a single edge or a single cycle.
bool is_cactus(const UndirectedGraph& g);

enum class DitreeClass { kPolytree, kArborescence, kInvalid };

DitreeClass classify_ditree(const DirectedTree& t);
const char* to_string(DitreeClass c);

struct CommonAncestor {
  VertexId vertex;
  std::int32_t to_u;  // directed hops lca -> u
  std::int32_t to_v;
};

// Lowest common ancestor in a polytree: the vertex from which both u and v
// are reachable along directed paths, closest to both. Absent when u and v
// share no ancestor (possible with several roots).
std::optional<CommonAncestor> common_ancestor(const DirectedTree& t, VertexId u, VertexId v);
std::optional<VertexId> lca(const DirectedTree& t, VertexId u, VertexId v);

}  // namespace burnlab
