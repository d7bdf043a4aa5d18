#include "burnlab/ditree.hpp"

#include <algorithm>
#include <string>

#include "burnlab/errors.hpp"

namespace burnlab {
namespace {

void require_polytree(const DirectedTree& t, const char* who) {
  if (classify_ditree(t) == DitreeClass::kInvalid) {
    throw InvalidInput(std::string(who) + ": input is not a polytree");
  }
}

void require_arborescence(const DirectedTree& t, const char* who) {
  if (classify_ditree(t) != DitreeClass::kArborescence) {
    throw InvalidInput(std::string(who) + ": input is not an arborescence");
  }
}

void require_positive(std::int64_t b, const char* who) {
  if (b < 1) throw InvalidInput(std::string(who) + ": b must be positive");
}

// Surviving vertices reachable from `from` along out-arcs within `radius`
// hops (unbounded when radius < 0), `from` included.
std::vector<VertexId> surviving_descendants(const CutTree& w, VertexId from, std::int64_t radius) {
  std::vector<VertexId> out{from};
  std::vector<std::int64_t> hops{0};
  for (std::size_t head = 0; head < out.size(); ++head) {
    if (radius >= 0 && hops[head] == radius) continue;
    for (VertexId c : w.tree().out_neighbors(out[head])) {
      if (w.contains(c)) {
        out.push_back(c);
        hops.push_back(hops[head] + 1);
      }
    }
  }
  return out;
}

// Emits the single-rooted centers; owner[v] is the index of the center whose
// subtree took v (or -1 if extraction stopped early).
std::vector<VertexId> decompose_singlerooted(const DirectedTree& t, std::int64_t b,
                                             std::optional<std::size_t> limit,
                                             std::vector<std::int32_t>* owner) {
  CutTree working(t);
  std::vector<VertexId> centers;
  if (owner) owner->assign(t.vertex_count(), -1);
  while (!working.empty()) {
    const CutTree cut = b_cutting(working, b - 1);
    for (VertexId v : cut.vertices()) {
      if (cut.out_degree(v) != 0 || cut.in_degree(v) > 1) continue;
      for (VertexId x : surviving_descendants(working, v, -1)) {
        if (owner) (*owner)[x] = static_cast<std::int32_t>(centers.size());
        working.remove(x);
      }
      centers.push_back(v);
    }
    if (limit && centers.size() > *limit) break;
  }
  return centers;
}

// Parent/depth index of an arborescence for O(depth) LCA queries.
class RootedIndex {
 public:
  explicit RootedIndex(const DirectedTree& t)
      : parent_(t.vertex_count(), -1), depth_(t.vertex_count(), 0) {
    const VertexId root = t.roots().front();
    std::vector<VertexId> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      for (VertexId c : t.out_neighbors(u)) {
        parent_[c] = u;
        depth_[c] = depth_[u] + 1;
        queue.push_back(c);
      }
    }
  }

  CommonAncestor lca(VertexId u, VertexId v) const {
    VertexId a = u;
    VertexId c = v;
    while (depth_[a] > depth_[c]) a = parent_[a];
    while (depth_[c] > depth_[a]) c = parent_[c];
    while (a != c) {
      a = parent_[a];
      c = parent_[c];
    }
    return {a, depth_[u] - depth_[a], depth_[v] - depth_[a]};
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::int32_t> depth_;
};

}  // namespace

CutTree::CutTree(const DirectedTree& t)
    : tree_(&t),
      alive_(t.vertex_count(), 1),
      in_(t.vertex_count()),
      out_(t.vertex_count()),
      size_(t.vertex_count()) {
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    in_[v] = static_cast<std::int32_t>(t.in_degree(static_cast<VertexId>(v)));
    out_[v] = static_cast<std::int32_t>(t.out_degree(static_cast<VertexId>(v)));
  }
}

std::vector<VertexId> CutTree::vertices() const {
  std::vector<VertexId> out;
  out.reserve(size_);
  for (std::size_t v = 0; v < alive_.size(); ++v) {
    if (alive_[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

void CutTree::remove(VertexId v) {
  if (!alive_[v]) return;
  alive_[v] = 0;
  --size_;
  for (VertexId p : tree_->in_neighbors(v)) {
    if (alive_[p]) --out_[p];
  }
  for (VertexId c : tree_->out_neighbors(v)) {
    if (alive_[c]) --in_[c];
  }
}

CutTree b_cutting(const CutTree& t, std::int64_t rounds) {
  CutTree out = t;
  std::vector<VertexId> current;
  for (std::size_t v = 0; v < t.tree().vertex_count(); ++v) {
    const auto id = static_cast<VertexId>(v);
    if (out.contains(id) && out.out_degree(id) == 0 && out.in_degree(id) == 1) current.push_back(id);
  }
  std::vector<VertexId> next;
  for (std::int64_t r = 0; r < rounds && !current.empty(); ++r) {
    next.clear();
    // Every candidate is a sink, so removing one never disturbs another.
    for (VertexId v : current) out.remove(v);
    for (VertexId v : current) {
      for (VertexId p : t.tree().in_neighbors(v)) {
        if (out.contains(p) && out.out_degree(p) == 0 && out.in_degree(p) == 1) next.push_back(p);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current.swap(next);
  }
  return out;
}

CutTree b_cutting(const DirectedTree& t, std::int64_t rounds) { return b_cutting(CutTree(t), rounds); }

PolytreeGuess centers_multirooted(const DirectedTree& t, std::int64_t b) {
  require_polytree(t, "centers_multirooted");
  require_positive(b, "centers_multirooted");
  const auto limit = static_cast<std::size_t>(b);

  PolytreeGuess out;
  CutTree working(t);
  for (std::int64_t round = b; round > 0 && !working.empty(); --round) {
    const CutTree cut = b_cutting(working, b - 1);
    for (VertexId v : cut.vertices()) {
      if (cut.out_degree(v) != 0) continue;
      if (cut.in_degree(v) <= 1) {
        out.centers.single_parent.push_back(v);
      } else {
        out.centers.multi_parent.push_back(v);
      }
      for (VertexId x : surviving_descendants(working, v, b)) working.remove(x);
    }
    // Both counts only grow; the verdict is already fixed.
    if (out.centers.single_parent.size() > limit || out.centers.multi_parent.size() > limit) break;
  }
  if (out.centers.single_parent.size() > limit) {
    out.outcome = BadGuess{BadGuess::Reason::kTooManyCenters};
  } else if (out.centers.multi_parent.size() > limit) {
    out.outcome = BadGuess{BadGuess::Reason::kTooManyMergeCenters};
  } else if (!working.empty()) {
    out.outcome = BadGuess{BadGuess::Reason::kUncovered};
  } else {
    CenterSets sets;
    sets.groups.push_back({out.centers.multi_parent, b});
    sets.groups.push_back({out.centers.single_parent, b});
    out.outcome = std::move(sets);
  }
  return out;
}

ApproxResult approx_polytree(const DirectedTree& t) {
  require_polytree(t, "approx_polytree");
  for (std::int64_t b = 1;; ++b) {
    PolytreeGuess guess = centers_multirooted(t, b);
    if (auto* sets = std::get_if<CenterSets>(&guess.outcome)) {
      const auto bound = static_cast<std::int64_t>(sets->center_count()) + b;
      BurningSchedule s = assemble(t, *sets, static_cast<std::size_t>(bound));
      return {std::move(s), b, bound};
    }
  }
}

std::vector<VertexId> centers_singlerooted(const DirectedTree& t, std::int64_t b,
                                           std::optional<std::size_t> limit) {
  require_arborescence(t, "centers_singlerooted");
  require_positive(b, "centers_singlerooted");
  return decompose_singlerooted(t, b, limit, nullptr);
}

RangeBudget::RangeBudget(std::int64_t max_range) {
  if (max_range < 0) throw InvalidInput("range budget must be non-negative");
  available_.resize(static_cast<std::size_t>(max_range) + 1);
  for (std::int64_t r = 0; r <= max_range; ++r) available_[static_cast<std::size_t>(r)] = r;
}

std::optional<std::int64_t> RangeBudget::take_at_least(std::int64_t threshold) {
  auto it = std::lower_bound(available_.begin(), available_.end(), threshold);
  if (it == available_.end()) return std::nullopt;
  const std::int64_t r = *it;
  available_.erase(it);
  return r;
}

bool RangeBudget::has_at_least(std::int64_t threshold) const {
  return !available_.empty() && available_.back() >= threshold;
}

std::optional<std::int64_t> lca_length(const DirectedTree& t, VertexId u, VertexId v) {
  const auto a = common_ancestor(t, u, v);
  if (!a) return std::nullopt;
  return std::max<std::int64_t>(a->to_u, a->to_v);
}

MergeResult merge_and_burn(const DirectedTree& t, std::int64_t b, const std::vector<VertexId>& centers) {
  require_arborescence(t, "merge_and_burn");
  require_positive(b, "merge_and_burn");
  for (VertexId c : centers) {
    if (!t.contains(c)) throw InvalidInput("merge_and_burn: center out of range");
  }

  const RootedIndex index(t);
  const std::int64_t reach = ceil_range(b, coeff::kMergeReach);
  const std::int64_t merge_range = ceil_range(b, coeff::kMergeRange);

  MergeResult out;
  MergePlan& plan = out.plan;
  plan.max_range = ceil_range(b, coeff::kArborescenceFactor);
  RangeBudget budget(plan.max_range);
  std::vector<char> consumed(centers.size(), 0);

  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (consumed[i]) continue;
    bool merged = false;
    if (budget.has_at_least(merge_range)) {
      for (std::size_t j = 0; j < centers.size(); ++j) {
        if (j == i || consumed[j] || centers[j] == centers[i]) continue;
        const CommonAncestor a = index.lca(centers[i], centers[j]);
        if (std::max<std::int64_t>(a.to_u, a.to_v) > reach) continue;
        plan.consumed_ranges.push_back(*budget.take_at_least(merge_range));
        plan.merge_roots.push_back(a.vertex);
        plan.merged_pairs.emplace_back(centers[i], centers[j]);
        consumed[i] = consumed[j] = 1;
        merged = true;
        break;
      }
    }
    if (merged) continue;
    const auto range = budget.take_at_least(b);
    if (!range) {
      out.outcome = BadGuess{BadGuess::Reason::kRangeBudgetExhausted};
      return out;
    }
    plan.consumed_ranges.push_back(*range);
    plan.unmerged.push_back(centers[i]);
    consumed[i] = 1;
  }

  std::vector<VertexId> roots = plan.merge_roots;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  CenterSets sets;
  sets.groups.push_back({std::move(roots), merge_range});
  sets.groups.push_back({plan.unmerged, b});
  out.outcome = std::move(sets);
  return out;
}

MergeResult guess_arborescence(const DirectedTree& t, std::int64_t b) {
  require_positive(b, "guess_arborescence");
  const auto centers = centers_singlerooted(t, b, static_cast<std::size_t>(b));
  if (centers.size() > static_cast<std::size_t>(b)) {
    return {BadGuess{BadGuess::Reason::kTooManyCenters}, {}};
  }
  return merge_and_burn(t, b, centers);
}

ApproxResult approx_arborescence(const DirectedTree& t) {
  require_arborescence(t, "approx_arborescence");
  for (std::int64_t b = 1;; ++b) {
    MergeResult guess = guess_arborescence(t, b);
    if (auto* sets = std::get_if<CenterSets>(&guess.outcome)) {
      const std::int64_t bound = guess.plan.max_range + 1;
      BurningSchedule s = assemble(t, *sets, static_cast<std::size_t>(bound));
      return {std::move(s), b, bound};
    }
  }
}

std::vector<VertexId> middle_subpath(const std::vector<VertexId>& path, std::int64_t b) {
  const auto strip = static_cast<std::size_t>(ceil_range(b, coeff::kPathStrip));
  if (path.size() <= 2 * strip) return {};
  return {path.begin() + static_cast<std::ptrdiff_t>(strip),
          path.end() - static_cast<std::ptrdiff_t>(strip)};
}

SCertificate s_certificate(const DirectedTree& t, std::int64_t b,
                           const std::vector<VertexId>& unmerged_centers) {
  require_arborescence(t, "s_certificate");
  require_positive(b, "s_certificate");
  std::vector<std::int32_t> owner;
  const auto centers = decompose_singlerooted(t, b, std::nullopt, &owner);

  SCertificate cert;
  cert.b = b;
  cert.s_b = b * (b + 1) / 2;
  for (VertexId c : unmerged_centers) {
    const auto it = std::find(centers.begin(), centers.end(), c);
    if (it == centers.end()) {
      throw InvalidInput("s_certificate: " + std::to_string(c) + " is not a center for this b");
    }
    const auto id = static_cast<std::int32_t>(it - centers.begin());
    // Deepest vertex of c's own subtree, smallest id among ties.
    std::vector<VertexId> order{c};
    std::vector<VertexId> parent(t.vertex_count(), -1);
    std::vector<std::int32_t> depth(t.vertex_count(), 0);
    VertexId deepest = c;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const VertexId u = order[head];
      if (depth[u] > depth[deepest] || (depth[u] == depth[deepest] && u < deepest)) deepest = u;
      for (VertexId w : t.out_neighbors(u)) {
        if (owner[w] != id) continue;
        parent[w] = u;
        depth[w] = depth[u] + 1;
        order.push_back(w);
      }
    }
    std::vector<VertexId> path;
    for (VertexId x = deepest; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    if (path.size() > static_cast<std::size_t>(b)) path.resize(static_cast<std::size_t>(b));
    auto middle = middle_subpath(path, b);
    cert.s_size += static_cast<std::int64_t>(middle.size());
    cert.middle_paths.push_back(std::move(middle));
  }
  return cert;
}

}  // namespace burnlab
