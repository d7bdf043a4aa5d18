#include "burnlab/cactus.hpp"

#include <algorithm>
#include <string>

#include "burnlab/errors.hpp"
#include "burnlab/oracles.hpp"

namespace burnlab {
namespace {

void require_cactus(const UndirectedGraph& g) {
  if (g.vertex_count() == 0) throw InvalidInput("cactus: empty graph");
  if (!is_connected(g)) throw InvalidInput("cactus: graph is not connected");
  if (!is_cactus(g)) throw InvalidInput("cactus: some edge lies on two cycles");
}

bool is_single_cycle(const UndirectedGraph& g) {
  if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count()) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(static_cast<VertexId>(v)) != 2) return false;
  }
  return is_connected(g);
}

}  // namespace

CactusContext::CactusContext(const UndirectedGraph& g) : g_(&g) {
  require_cactus(g);
  const auto cuts = articulation_points(g);
  if (cuts.empty()) {
    throw InvalidInput("cactus without articulation point: burn the cycle with burn_cycle()");
  }
  build(cuts.front());
}

CactusContext::CactusContext(const UndirectedGraph& g, VertexId root) : g_(&g) {
  require_cactus(g);
  if (!g.contains(root)) throw InvalidInput("cactus root out of range");
  build(root);
}

void CactusContext::build(VertexId root) {
  root_ = root;
  const DistanceMap d = bfs_distances(*g_, root);
  const std::size_t n = g_->vertex_count();
  depth_.resize(n);
  for (std::size_t v = 0; v < n; ++v) depth_[v] = *d.at(static_cast<VertexId>(v));
  toward_root_ = decompose_blocks(*g_, root).toward_root;
  by_depth_.resize(n);
  for (std::size_t v = 0; v < n; ++v) by_depth_[v] = static_cast<VertexId>(v);
  std::stable_sort(by_depth_.begin(), by_depth_.end(),
                   [&](VertexId a, VertexId b) { return depth_[a] > depth_[b]; });
}

std::optional<VertexId> articulation_on_path(const CactusContext& ctx, VertexId f, std::int64_t b) {
  const std::int64_t lo = ceil_range(b, coeff::kQuarter);
  const std::int64_t hi = ceil_range(b, coeff::kSevenQuarters);
  std::optional<VertexId> best;
  // Separators of f from the root, nearest first. Every f-root path crosses
  // each of them, so d(f, v) = depth(f) - depth(v).
  for (VertexId v = ctx.toward_root(f); v != -1; v = ctx.toward_root(v)) {
    const std::int64_t d = ctx.depth(f) - ctx.depth(v);
    if (d > hi) break;
    if (d >= lo) best = v;
  }
  return best;
}

std::optional<VertexId> articulation_on_path(const UndirectedGraph& g, VertexId f, VertexId r,
                                             std::int64_t b) {
  return articulation_on_path(CactusContext(g, r), f, b);
}

CactusGuess burn_guess_cactus(const CactusContext& ctx, std::int64_t b,
                              const CactusGuessOptions& options) {
  if (b < 1) throw InvalidInput("burn_guess_cactus: b must be positive");
  const UndirectedGraph& g = ctx.graph();
  const std::size_t n = g.vertex_count();

  std::int64_t wide_left = ceil_range(b, coeff::kQuarter);
  std::int64_t narrow_left = ceil_range(b, coeff::kThreeQuarters);
  const std::int64_t wide_radius = ceil_range(b, coeff::kSevenQuarters);
  const std::int64_t narrow_radius = std::max<std::int64_t>(2 * b - 2, 0);

  CactusGuess out;
  std::vector<char> marked(n, 0);
  std::size_t marked_count = 0;
  BallScanner<UndirectedGraph> scanner(g);
  auto mark_ball = [&](VertexId center, std::int64_t radius) {
    scanner.scan(center, radius, [&](VertexId v, std::int64_t) {
      if (!marked[v]) {
        marked[v] = 1;
        ++marked_count;
      }
    });
  };

  // Scratch for the inclusion check.
  std::vector<char> in_wide_ball;
  if (options.check_inclusion) in_wide_ball.assign(n, 0);

  auto cursor = ctx.by_depth().begin();
  while (marked_count < n) {
    while (marked[*cursor]) ++cursor;
    const VertexId f = *cursor;

    const auto used = static_cast<std::int64_t>(out.wide_centers.size() + out.narrow_centers.size());
    if (used == b) {
      out.outcome = BadGuess{BadGuess::Reason::kAllRangesExhausted};
      return out;
    }

    const auto cut = articulation_on_path(ctx, f, b);
    if (cut && wide_left >= 1) {
      if (options.check_inclusion) {
        ++out.inclusion_checks;
        std::vector<VertexId> wide = scanner.ball(*cut, wide_radius);
        for (VertexId v : wide) in_wide_ball[v] = 1;
        bool ok = true;
        scanner.scan(f, narrow_radius, [&](VertexId v, std::int64_t) {
          if (!marked[v] && !in_wide_ball[v]) ok = false;
        });
        if (!ok) ++out.inclusion_violations;
        for (VertexId v : wide) in_wide_ball[v] = 0;
      }
      out.wide_centers.push_back(*cut);
      mark_ball(*cut, wide_radius);
      --wide_left;
    } else if (narrow_left >= 1) {
      out.narrow_centers.push_back(f);
      mark_ball(f, narrow_radius);
      --narrow_left;
    } else {
      out.outcome = BadGuess{wide_left == 0 ? BadGuess::Reason::kAllRangesExhausted
                                            : BadGuess::Reason::kSmallRangesExhausted};
      return out;
    }
  }
  CenterSets centers;
  centers.groups.push_back({out.wide_centers, wide_radius});
  centers.groups.push_back({out.narrow_centers, narrow_radius});
  out.outcome = std::move(centers);
  return out;
}

CactusGuess burn_guess_cactus(const UndirectedGraph& g, std::int64_t b,
                              const CactusGuessOptions& options) {
  return burn_guess_cactus(CactusContext(g), b, options);
}

BurningSchedule burn_cycle(const UndirectedGraph& g) {
  if (!is_single_cycle(g)) throw InvalidInput("burn_cycle: graph is not a single cycle");
  const std::size_t n = g.vertex_count();
  // Walk the cycle to get its vertex order.
  std::vector<VertexId> order{0};
  VertexId prev = -1;
  VertexId cur = 0;
  while (order.size() < n) {
    auto nb = g.neighbors(cur);
    const VertexId next = nb[0] != prev ? nb[0] : nb[1];
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  // Consecutive arcs of 2k+1 vertices for k = L-1, ..., 0 cover L^2 >= n.
  const auto length = static_cast<std::size_t>(cycle_formula(static_cast<std::int64_t>(n)));
  CenterSets centers;
  std::size_t start = 0;
  for (std::int64_t k = static_cast<std::int64_t>(length) - 1; k >= 0 && start < n; --k) {
    const std::size_t mid = std::min(start + static_cast<std::size_t>(k), n - 1);
    centers.groups.push_back({{order[mid]}, k});
    start += 2 * static_cast<std::size_t>(k) + 1;
  }
  return assemble(g, centers, length);
}

ApproxResult approx_cactus(const UndirectedGraph& g) {
  require_cactus(g);
  const std::size_t n = g.vertex_count();
  if (n == 1) return {BurningSchedule{{0}}, 1, 1};
  if (n == 2) return {BurningSchedule{{0, 1}}, 2, 2};
  if (articulation_points(g).empty()) {
    BurningSchedule s = burn_cycle(g);
    const auto len = static_cast<std::int64_t>(s.length());
    return {std::move(s), len, len};
  }
  const CactusContext ctx(g);
  for (std::int64_t b = 1;; ++b) {
    CactusGuess guess = burn_guess_cactus(ctx, b);
    if (auto* centers = std::get_if<CenterSets>(&guess.outcome)) {
      const std::int64_t bound = ceil_range(b, coeff::kElevenQuarters);
      BurningSchedule s = assemble(g, *centers, static_cast<std::size_t>(bound));
      return {std::move(s), b, bound};
    }
  }
}

}  // namespace burnlab
