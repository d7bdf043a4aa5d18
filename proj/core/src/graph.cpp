#include "burnlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "burnlab/errors.hpp"

namespace burnlab {
namespace {

void check_endpoints(std::size_t n, const Edge& e, const char* what) {
  auto in_range = [n](VertexId v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
  if (!in_range(e.first) || !in_range(e.second)) {
    throw InvalidInput(std::string(what) + " (" + std::to_string(e.first) + ", " +
                       std::to_string(e.second) + ") references a vertex outside [0, " +
                       std::to_string(n) + ")");
  }
  if (e.first == e.second) {
    throw InvalidInput(std::string(what) + " self-loop at " + std::to_string(e.first));
  }
}

// Builds CSR adjacency from (from, to) pairs; rows end up sorted.
void build_csr(std::size_t n, const std::vector<Edge>& pairs, std::vector<std::size_t>& offsets,
               std::vector<VertexId>& targets) {
  offsets.assign(n + 1, 0);
  for (const auto& [a, b] : pairs) {
    (void)b;
    ++offsets[a + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  targets.assign(pairs.size(), 0);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& [a, b] : pairs) targets[fill[a]++] = b;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(targets.begin() + offsets[v], targets.begin() + offsets[v + 1]);
  }
}

bool has_adjacent_duplicates(const std::vector<std::size_t>& offsets,
                             const std::vector<VertexId>& targets, VertexId& where) {
  for (std::size_t v = 0; v + 1 < offsets.size(); ++v) {
    for (std::size_t i = offsets[v] + 1; i < offsets[v + 1]; ++i) {
      if (targets[i] == targets[i - 1]) {
        where = static_cast<VertexId>(v);
        return true;
      }
    }
  }
  return false;
}

template <class Neighbors>
DistanceMap bfs(std::size_t n, VertexId source, Neighbors&& neighbors) {
  if (source < 0 || static_cast<std::size_t>(source) >= n) {
    throw InvalidInput("bfs source " + std::to_string(source) + " out of range");
  }
  std::vector<std::int32_t> hops(n, -1);
  std::vector<VertexId> queue{source};
  hops[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    auto visit = [&](VertexId w) {
      if (hops[w] == -1) {
        hops[w] = hops[u] + 1;
        queue.push_back(w);
      }
    };
    neighbors(u, visit);
  }
  return DistanceMap(source, std::move(hops));
}

}  // namespace

UndirectedGraph::UndirectedGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  std::vector<Edge> both;
  both.reserve(2 * edges_.size());
  for (const auto& e : edges_) {
    check_endpoints(n_, e, "edge");
    both.emplace_back(e.first, e.second);
    both.emplace_back(e.second, e.first);
  }
  build_csr(n_, both, offsets_, targets_);
  VertexId where = -1;
  if (has_adjacent_duplicates(offsets_, targets_, where)) {
    throw InvalidInput("parallel edge at vertex " + std::to_string(where));
  }
}

bool UndirectedGraph::has_edge(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

DirectedTree::DirectedTree(std::size_t vertex_count, std::vector<Edge> arcs)
    : n_(vertex_count), arcs_(std::move(arcs)) {
  std::vector<Edge> reversed;
  reversed.reserve(arcs_.size());
  for (const auto& a : arcs_) {
    check_endpoints(n_, a, "arc");
    reversed.emplace_back(a.second, a.first);
  }
  build_csr(n_, arcs_, out_offsets_, out_targets_);
  build_csr(n_, reversed, in_offsets_, in_targets_);
  VertexId where = -1;
  if (has_adjacent_duplicates(out_offsets_, out_targets_, where)) {
    throw InvalidInput("repeated arc out of vertex " + std::to_string(where));
  }
  for (std::size_t v = 0; v < n_; ++v) {
    if (in_offsets_[v + 1] == in_offsets_[v]) roots_.push_back(static_cast<VertexId>(v));
  }
}

DistanceMap bfs_distances(const UndirectedGraph& g, VertexId source) {
  return bfs(g.vertex_count(), source, [&](VertexId u, auto&& visit) {
    for (VertexId w : g.neighbors(u)) visit(w);
  });
}

DistanceMap bfs_distances(const DirectedTree& t, VertexId source, Traversal traversal) {
  return bfs(t.vertex_count(), source, [&](VertexId u, auto&& visit) {
    for (VertexId w : t.out_neighbors(u)) visit(w);
    if (traversal == Traversal::kUndirected) {
      for (VertexId w : t.in_neighbors(u)) visit(w);
    }
  });
}

bool is_connected(const UndirectedGraph& g) {
  if (g.vertex_count() == 0) return true;
  const DistanceMap d = bfs_distances(g, 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!d.reachable(static_cast<VertexId>(v))) return false;
  }
  return true;
}

BlockDecomposition decompose_blocks(const UndirectedGraph& g, VertexId root) {
  const std::size_t n = g.vertex_count();
  if (!g.contains(root)) throw InvalidInput("block decomposition root out of range");

  BlockDecomposition out;
  out.root = root;
  out.toward_root.assign(n, -1);
  out.is_cut_vertex.assign(n, 0);

  std::vector<std::int32_t> disc(n, -1), low(n, 0);
  std::vector<VertexId> parent(n, -1);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<VertexId> call_stack;
  // Edges (u, w) pushed when first traversed; popped per block.
  std::vector<Edge> edge_stack;
  std::vector<std::uint32_t> seen_in_block(n, 0);
  std::uint32_t block_epoch = 0;
  std::int32_t timer = 0;
  std::size_t root_children = 0;

  disc[root] = low[root] = timer++;
  call_stack.push_back(root);
  while (!call_stack.empty()) {
    const VertexId u = call_stack.back();
    auto nb = g.neighbors(u);
    if (next_edge[u] < nb.size()) {
      const VertexId w = nb[next_edge[u]++];
      if (disc[w] == -1) {
        parent[w] = u;
        disc[w] = low[w] = timer++;
        edge_stack.emplace_back(u, w);
        call_stack.push_back(w);
        if (u == root) ++root_children;
      } else if (w != parent[u] && disc[w] < disc[u]) {
        edge_stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    call_stack.pop_back();
    const VertexId p = parent[u];
    if (p == -1) continue;
    low[p] = std::min(low[p], low[u]);
    if (low[u] < disc[p]) continue;

    // p heads a new block containing the tree edge (p, u).
    if (p != root) out.is_cut_vertex[p] = 1;
    BlockDecomposition::Block block;
    block.head = p;
    ++block_epoch;
    auto add_vertex = [&](VertexId x) {
      if (seen_in_block[x] != block_epoch) {
        seen_in_block[x] = block_epoch;
        block.vertices.push_back(x);
        if (x != p) out.toward_root[x] = p;
      }
    };
    while (true) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      ++block.edge_count;
      add_vertex(e.first);
      add_vertex(e.second);
      if (e.first == p && e.second == u) break;
    }
    std::sort(block.vertices.begin(), block.vertices.end());
    out.blocks.push_back(std::move(block));
  }
  if (root_children > 1) out.is_cut_vertex[root] = 1;
  return out;
}

std::vector<VertexId> articulation_points(const UndirectedGraph& g) {
  std::vector<VertexId> cuts;
  std::vector<char> visited(g.vertex_count(), 0);
  // One decomposition per connected component keeps this total on forests too.
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (visited[s]) continue;
    const BlockDecomposition blocks = decompose_blocks(g, static_cast<VertexId>(s));
    visited[s] = 1;
    for (const auto& b : blocks.blocks) {
      for (VertexId v : b.vertices) visited[v] = 1;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (blocks.is_cut_vertex[v]) cuts.push_back(static_cast<VertexId>(v));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

VertexId farthest_from(const UndirectedGraph& g, VertexId source,
                       const std::function<bool(VertexId)>& eligible) {
  const DistanceMap d = bfs_distances(g, source);
  VertexId best = -1;
  std::int32_t best_hops = -1;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto v = static_cast<VertexId>(i);
    if (!d.reachable(v) || !eligible(v)) continue;
    if (*d.at(v) > best_hops) {
      best = v;
      best_hops = *d.at(v);
    }
  }
  if (best == -1) throw InvalidInput("farthest_from: no eligible vertex");
  return best;
}

bool is_cactus(const UndirectedGraph& g) {
  if (!is_connected(g)) return false;
  if (g.vertex_count() <= 1) return true;
  const BlockDecomposition blocks = decompose_blocks(g, 0);
  for (const auto& b : blocks.blocks) {
    const bool bridge = b.vertices.size() == 2 && b.edge_count == 1;
    const bool cycle = b.vertices.size() >= 3 && b.edge_count == b.vertices.size();
    if (!bridge && !cycle) return false;
  }
  return true;
}

DitreeClass classify_ditree(const DirectedTree& t) {
  const std::size_t n = t.vertex_count();
  if (n == 0 || t.arc_count() != n - 1) return DitreeClass::kInvalid;
  const DistanceMap d = bfs_distances(t, 0, Traversal::kUndirected);
  for (std::size_t v = 0; v < n; ++v) {
    if (!d.reachable(static_cast<VertexId>(v))) return DitreeClass::kInvalid;
  }
  // n - 1 arcs and connected: the underlying graph is a tree.
  for (std::size_t v = 0; v < n; ++v) {
    if (t.in_degree(static_cast<VertexId>(v)) > 1) return DitreeClass::kPolytree;
  }
  return DitreeClass::kArborescence;
}

const char* to_string(DitreeClass c) {
  switch (c) {
    case DitreeClass::kPolytree:
      return "polytree";
    case DitreeClass::kArborescence:
      return "arborescence";
    case DitreeClass::kInvalid:
      return "invalid";
  }
  return "invalid";
}

std::optional<CommonAncestor> common_ancestor(const DirectedTree& t, VertexId u, VertexId v) {
  if (!t.contains(u) || !t.contains(v)) throw InvalidInput("lca: vertex out of range");
  auto ancestors = [&](VertexId x) {
    std::vector<std::int32_t> hops(t.vertex_count(), -1);
    std::vector<VertexId> queue{x};
    hops[x] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId a = queue[head];
      for (VertexId p : t.in_neighbors(a)) {
        if (hops[p] == -1) {
          hops[p] = hops[a] + 1;
          queue.push_back(p);
        }
      }
    }
    return hops;
  };
  const auto from_u = ancestors(u);
  const auto from_v = ancestors(v);
  std::optional<CommonAncestor> best;
  for (std::size_t i = 0; i < t.vertex_count(); ++i) {
    if (from_u[i] < 0 || from_v[i] < 0) continue;
    const std::int64_t total = std::int64_t{from_u[i]} + from_v[i];
    if (!best || total < std::int64_t{best->to_u} + best->to_v) {
      best = CommonAncestor{static_cast<VertexId>(i), from_u[i], from_v[i]};
    }
  }
  return best;
}

std::optional<VertexId> lca(const DirectedTree& t, VertexId u, VertexId v) {
  if (auto a = common_ancestor(t, u, v)) return a->vertex;
  return std::nullopt;
}

}  // namespace burnlab
