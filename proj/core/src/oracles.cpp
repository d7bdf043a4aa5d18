#include "burnlab/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <utility>

#include "burnlab/errors.hpp"

namespace burnlab {
namespace {

// Hard ceiling on the bitmask width, whatever the configured cap says.
constexpr std::size_t kMaskBits = 30;

using Mask = std::uint32_t;

struct Step {
  Mask previous;
  VertexId center;
};

// Layer k holds every vertex set coverable by k fires of radii 0..k-1, the
// fire of radius k-1 being lit first. The first layer holding the full set
// gives the burning number. Each layer remembers one predecessor per state
// for the witness.
template <BurnableGraph G>
ExactResult exact_search(const G& g, const ExactOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InvalidInput("exact_burning_number: empty graph");
  if (n > options.max_vertices || n > kMaskBits) {
    throw InvalidInput("exact_burning_number: " + std::to_string(n) +
                       " vertices exceeds the oracle cap of " +
                       std::to_string(std::min(options.max_vertices, kMaskBits)));
  }
  const Mask full = (Mask{1} << n) - 1;
  BallScanner<G> scanner(g);

  ExactResult result;
  std::vector<std::unordered_map<Mask, Step>> layers(1);
  layers[0].emplace(Mask{0}, Step{0, -1});
  std::size_t k = 0;
  while (!layers[k].contains(full)) {
    std::vector<Mask> radius_k(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      scanner.scan(static_cast<VertexId>(c), static_cast<std::int64_t>(k),
                   [&](VertexId v, std::int64_t) { radius_k[c] |= Mask{1} << v; });
    }
    std::unordered_map<Mask, Step> next;
    for (const auto& [mask, unused] : layers[k]) {
      for (std::size_t c = 0; c < n; ++c) {
        if (++result.states_expanded > options.expansion_budget) {
          throw BudgetExceeded("exact_burning_number: expansion budget exhausted");
        }
        const Mask grown = mask | radius_k[c];
        if (grown == mask) continue;
        next.try_emplace(grown, Step{mask, static_cast<VertexId>(c)});
      }
    }
    layers.push_back(std::move(next));
    ++k;
  }

  CenterSets sets;
  Mask state = full;
  for (std::size_t layer = k; layer > 0; --layer) {
    const Step& step = layers[layer].at(state);
    sets.groups.push_back({{step.center}, static_cast<std::int64_t>(layer - 1)});
    state = step.previous;
  }
  result.b = static_cast<std::int64_t>(k);
  result.witness = assemble(g, sets, k);
  return result;
}

}  // namespace

std::size_t oracle_vertex_cap() {
  if (const char* env = std::getenv("BURNLAB_ORACLE_CAP")) {
    try {
      const long long cap = std::stoll(env);
      if (cap > 0) return static_cast<std::size_t>(cap);
    } catch (const std::exception&) {
    }
  }
  return 14;
}

ExactResult exact_burning_number(const UndirectedGraph& g, const ExactOptions& options) {
  return exact_search(g, options);
}

ExactResult exact_burning_number(const DirectedTree& t, const ExactOptions& options) {
  return exact_search(t, options);
}

std::int64_t cycle_formula(std::int64_t n) {
  if (n < 3) throw InvalidInput("cycle_formula: a cycle needs at least 3 vertices");
  std::int64_t r = 0;
  while (r * r < n) ++r;
  return r;
}

GuessOutcome baseline_guess(const UndirectedGraph& g, std::int64_t b) {
  if (b < 1) throw InvalidInput("baseline_guess: b must be positive");
  const std::size_t n = g.vertex_count();
  const std::int64_t radius = 2 * b - 2;
  std::vector<char> marked(n, 0);
  std::vector<VertexId> centers;
  BallScanner<UndirectedGraph> scanner(g);
  std::size_t next = 0;
  for (;;) {
    while (next < n && marked[next]) ++next;
    if (next == n) break;
    if (centers.size() == static_cast<std::size_t>(b)) return BadGuess{BadGuess::Reason::kAllRangesExhausted};
    const auto c = static_cast<VertexId>(next);
    centers.push_back(c);
    scanner.scan(c, radius, [&](VertexId v, std::int64_t) { marked[v] = 1; });
  }
  CenterSets sets;
  sets.groups.push_back({std::move(centers), radius});
  return sets;
}

ApproxResult baseline_3approx(const UndirectedGraph& g) {
  if (!is_connected(g)) throw InvalidInput("baseline_3approx: graph is not connected");
  for (std::int64_t b = 1;; ++b) {
    GuessOutcome guess = baseline_guess(g, b);
    if (auto* sets = std::get_if<CenterSets>(&guess)) {
      const std::int64_t bound = 3 * b - 2;
      BurningSchedule s = assemble(g, *sets, static_cast<std::size_t>(bound));
      return {std::move(s), b, bound};
    }
  }
}

}  // namespace burnlab
