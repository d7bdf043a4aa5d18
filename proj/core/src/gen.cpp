#include "burnlab/gen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "burnlab/errors.hpp"

namespace burnlab {
namespace {

// A chord spans 2..6 tree edges, so cycles have 3 to 7 vertices. Longer
// spans use up tree edges quickly and starve later chords.
constexpr std::int64_t kMaxChordSpan = 6;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

void check_spec(const GenSpec& spec, GraphClass expected) {
  if (spec.cls != expected) {
    throw InvalidInput(std::string("generator for ") + to_string(expected) + " called with class " +
                       to_string(spec.cls));
  }
  if (spec.n == 0) throw InvalidInput("n must be at least 1");
  if (spec.n > static_cast<std::size_t>(std::numeric_limits<VertexId>::max())) {
    throw InvalidInput("n too large");
  }
  if (!(spec.cycle_fraction >= 0.0 && spec.cycle_fraction <= 0.5)) {
    throw InvalidInput("cycle_fraction must lie in [0, 0.5]");
  }
}

// parent[0] = -1; parent[i] < i.
std::vector<VertexId> random_parents(Rng& rng, std::size_t n, std::size_t max_out_degree) {
  const auto w = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n)))));
  std::vector<VertexId> parent(n, -1);
  std::vector<std::size_t> children(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    const auto lo = std::max<std::int64_t>(0, static_cast<std::int64_t>(i) - w);
    auto p = static_cast<VertexId>(rng.between(lo, static_cast<std::int64_t>(i) - 1));
    // i-1 has no children yet, so it always has room.
    if (max_out_degree != 0 && children[p] >= max_out_degree) p = static_cast<VertexId>(i - 1);
    parent[i] = p;
    ++children[p];
  }
  return parent;
}

std::vector<VertexId> random_permutation(Rng& rng, std::size_t n) {
  std::vector<VertexId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<VertexId>(i);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  return perm;
}

std::vector<Edge> relabel(std::vector<Edge> edges, const std::vector<VertexId>& perm, bool directed) {
  for (auto& [a, b] : edges) {
    a = perm[a];
    b = perm[b];
    if (!directed && a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kCactus:
      return "cactus";
    case GraphClass::kPolytree:
      return "polytree";
    case GraphClass::kArborescence:
      return "arborescence";
  }
  return "?";
}

std::optional<GraphClass> parse_graph_class(std::string_view name) {
  if (name == "cactus") return GraphClass::kCactus;
  if (name == "polytree") return GraphClass::kPolytree;
  if (name == "arborescence") return GraphClass::kArborescence;
  return std::nullopt;
}

UndirectedGraph random_cactus(const GenSpec& spec) {
  check_spec(spec, GraphClass::kCactus);
  const std::size_t n = spec.n;
  Rng rng(spec.seed);
  const auto parent = random_parents(rng, n, spec.max_out_degree);

  std::vector<Edge> edges;
  edges.reserve(n + n / 2);
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(parent[i], static_cast<VertexId>(i));

  // A chord closes the tree path below it into a cycle. Paths that share no
  // tree edge keep every edge on at most one cycle.
  const auto target = static_cast<std::size_t>(std::llround(spec.cycle_fraction * static_cast<double>(n)));
  std::vector<char> edge_used(n, 0);  // edge_used[v]: tree edge v - parent[v]
  std::size_t made = 0;
  for (std::size_t attempt = 0; attempt < 4 * target && made < target && n >= 3; ++attempt) {
    const auto low = static_cast<VertexId>(rng.between(1, static_cast<std::int64_t>(n) - 1));
    const std::int64_t len = rng.between(2, kMaxChordSpan);
    VertexId top = low;
    bool ok = true;
    for (std::int64_t step = 0; step < len; ++step) {
      if (parent[top] < 0 || edge_used[top]) {
        ok = false;
        break;
      }
      top = parent[top];
    }
    if (!ok) continue;
    for (VertexId v = low; v != top; v = parent[v]) edge_used[v] = 1;
    edges.emplace_back(top, low);
    ++made;
  }

  return UndirectedGraph(n, relabel(std::move(edges), random_permutation(rng, n), false));
}

DirectedTree random_arborescence(const GenSpec& spec) {
  check_spec(spec, GraphClass::kArborescence);
  const std::size_t n = spec.n;
  Rng rng(spec.seed);
  const auto parent = random_parents(rng, n, spec.max_out_degree);
  std::vector<Edge> arcs;
  arcs.reserve(n);
  for (std::size_t i = 1; i < n; ++i) arcs.emplace_back(parent[i], static_cast<VertexId>(i));
  return DirectedTree(n, relabel(std::move(arcs), random_permutation(rng, n), true));
}

DirectedTree random_polytree(const GenSpec& spec) {
  check_spec(spec, GraphClass::kPolytree);
  const std::size_t n = spec.n;
  Rng rng(spec.seed);
  const auto parent = random_parents(rng, n, spec.max_out_degree);

  std::vector<Edge> arcs;
  arcs.reserve(n);
  std::vector<std::int32_t> indeg(n, 0);
  std::vector<std::int32_t> degree(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    const auto c = static_cast<VertexId>(i);
    Edge e = rng.coin() ? Edge{parent[i], c} : Edge{c, parent[i]};
    ++indeg[e.second];
    ++degree[parent[i]];
    ++degree[c];
    arcs.push_back(e);
  }

  // Turn leaves into sources until there are two roots. Every flip makes a
  // leaf a permanent root and unroots at most its neighbour, so it ends.
  auto roots = [&] { return std::count(indeg.begin(), indeg.end(), 0); };
  while (n >= 3 && roots() < 2) {
    std::vector<std::size_t> candidates;  // arcs pointing into a leaf
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      if (degree[arcs[k].second] == 1) candidates.push_back(k);
    }
    Edge& e = arcs[candidates[rng.below(candidates.size())]];
    --indeg[e.second];
    std::swap(e.first, e.second);
    ++indeg[e.second];
  }

  return DirectedTree(n, relabel(std::move(arcs), random_permutation(rng, n), true));
}

AnyGraph generate(const GenSpec& spec) {
  switch (spec.cls) {
    case GraphClass::kCactus:
      return random_cactus(spec);
    case GraphClass::kPolytree:
      return random_polytree(spec);
    case GraphClass::kArborescence:
      return random_arborescence(spec);
  }
  throw InvalidInput("unknown graph class");
}

std::filesystem::path fixture_path(const std::filesystem::path& dir, const GenSpec& spec) {
  return dir / to_string(spec.cls) / ("n" + std::to_string(spec.n) + "_s" + std::to_string(spec.seed) + ".graph");
}

}  // namespace burnlab
