#include "burnlab/burn.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "burnlab/errors.hpp"

namespace burnlab {
namespace {

// Round-by-round fire. Tracks the vertices that caught fire in the previous
// round so each round only expands the frontier.
template <BurnableGraph G>
class FireState {
 public:
  explicit FireState(const G& g) : g_(&g), burned_(g.vertex_count(), 0) {}

  bool burning(VertexId v) const { return burned_[v] != 0; }
  std::size_t burned_count() const { return count_; }
  bool complete() const { return count_ == burned_.size(); }
  std::vector<char> take_burned() && { return std::move(burned_); }

  // One round: spread from last round's fires, then light `source` (if any).
  void advance(std::optional<VertexId> source) {
    next_.clear();
    for (VertexId u : frontier_) {
      for (VertexId w : spread_neighbors(*g_, u)) {
        if (!burned_[w]) {
          burned_[w] = 1;
          ++count_;
          next_.push_back(w);
        }
      }
    }
    if (source && !burned_[*source]) {
      burned_[*source] = 1;
      ++count_;
      next_.push_back(*source);
    }
    frontier_.swap(next_);
  }

 private:
  const G* g_;
  std::vector<char> burned_;
  std::size_t count_ = 0;
  std::vector<VertexId> frontier_;
  std::vector<VertexId> next_;
};

// Returns the first rule the schedule breaks before the coverage check, if any.
template <BurnableGraph G>
std::optional<Verdict> check_sources(const G& g, const BurningSchedule& s) {
  std::vector<char> used(g.vertex_count(), 0);
  for (std::size_t i = 0; i < s.sources.size(); ++i) {
    const VertexId v = s.sources[i];
    if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
      return Verdict{Verdict::Rule::kSourceOutOfRange, i, v};
    }
    if (used[v]) return Verdict{Verdict::Rule::kRepeatedSource, i, v};
    used[v] = 1;
  }
  return std::nullopt;
}

template <BurnableGraph G>
std::pair<SimulationResult, std::optional<Verdict>> run(const G& g, const BurningSchedule& s) {
  if (auto bad = check_sources(g, s)) return {SimulationResult{}, bad};
  FireState<G> fire(g);
  SimulationResult result;
  for (std::size_t i = 0; i < s.sources.size(); ++i) {
    const VertexId v = s.sources[i];
    if (fire.burning(v)) {
      return {SimulationResult{}, Verdict{Verdict::Rule::kSourceAlreadyBurned, i, v}};
    }
    fire.advance(v);
    if (!result.rounds_to_cover && fire.complete()) result.rounds_to_cover = i + 1;
  }
  result.burned_count = fire.burned_count();
  result.burned = std::move(fire).take_burned();
  return {std::move(result), std::nullopt};
}

template <BurnableGraph G>
SimulationResult simulate_impl(const G& g, const BurningSchedule& s) {
  auto [result, bad] = run(g, s);
  if (bad) throw InvalidSchedule(bad->describe());
  return std::move(result);
}

template <BurnableGraph G>
Verdict validate_impl(const G& g, const BurningSchedule& s) {
  auto [result, bad] = run(g, s);
  if (bad) return *bad;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!result.burned[v]) {
      return Verdict{Verdict::Rule::kVertexUnburned, s.sources.size(), static_cast<VertexId>(v)};
    }
  }
  return Verdict{};
}

template <BurnableGraph G>
BurningSchedule assemble_impl(const G& g, const CenterSets& centers, std::size_t length) {
  struct Slot {
    VertexId center;
    std::int64_t radius;
  };
  std::vector<Slot> slots;
  std::vector<char> seen(g.vertex_count(), 0);
  for (const auto& group : centers.groups) {
    if (group.radius < 0) throw InvalidInput("center radius must be non-negative");
    for (VertexId c : group.centers) {
      if (!g.contains(c)) throw InvalidInput("center " + std::to_string(c) + " out of range");
      slots.push_back({c, group.radius});
    }
  }
  std::stable_sort(slots.begin(), slots.end(),
                   [](const Slot& a, const Slot& b) { return a.radius > b.radius; });
  // A center listed twice keeps its widest radius.
  std::erase_if(slots, [&](const Slot& s) {
    if (seen[s.center]) return true;
    seen[s.center] = 1;
    return false;
  });
  if (slots.size() > length) {
    throw Infeasible(std::to_string(slots.size()) + " centers do not fit in a schedule of length " +
                     std::to_string(length));
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto available = static_cast<std::int64_t>(length) - 1 - static_cast<std::int64_t>(i);
    if (available < slots[i].radius) {
      throw Infeasible("center " + std::to_string(slots[i].center) + " needs radius " +
                       std::to_string(slots[i].radius) + " but position " + std::to_string(i) +
                       " only gives " + std::to_string(available));
    }
  }

  BurningSchedule out;
  if (g.vertex_count() == 0) return out;
  FireState<G> fire(g);
  VertexId filler_cursor = 0;
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (std::size_t i = 0; i < length && !fire.complete(); ++i) {
    VertexId source = -1;
    if (i < slots.size() && !fire.burning(slots[i].center)) {
      source = slots[i].center;
    } else {
      while (filler_cursor < n && fire.burning(filler_cursor)) ++filler_cursor;
      source = filler_cursor;  // exists: the graph is not fully burned yet
    }
    out.sources.push_back(source);
    fire.advance(source);
  }
  if (!fire.complete()) {
    throw Infeasible("centers leave " + std::to_string(g.vertex_count() - fire.burned_count()) +
                     " vertices unburned after " + std::to_string(length) + " rounds");
  }
  return out;
}

}  // namespace

std::int64_t ceil_range(std::int64_t b, Ratio k) {
  if (b < 1) throw InvalidInput("ceil_range: b must be positive");
  if (k.num < 0 || k.den <= 0) throw InvalidInput("ceil_range: coefficient must be non-negative");
  const std::int64_t product = b * k.num;
  return product / k.den + (product % k.den != 0 ? 1 : 0);
}

std::string to_line(const BurningSchedule& s) {
  std::string out;
  for (std::size_t i = 0; i < s.sources.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s.sources[i]);
  }
  return out;
}

BurningSchedule parse_schedule(std::string_view text) {
  BurningSchedule s;
  std::size_t i = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    while (i < text.size() && space(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !space(text[j])) ++j;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, v);
    if (ec != std::errc() || ptr != text.data() + j || v < 0 ||
        v > std::numeric_limits<VertexId>::max()) {
      throw InvalidInput("schedule: bad vertex id '" + std::string(text.substr(i, j - i)) + "'");
    }
    s.sources.push_back(static_cast<VertexId>(v));
    i = j;
  }
  return s;
}

std::string Verdict::describe() const {
  switch (rule) {
    case Rule::kAccepted:
      return "accept";
    case Rule::kSourceOutOfRange:
      return "source " + std::to_string(vertex) + " at position " + std::to_string(position) +
             " is not a vertex";
    case Rule::kRepeatedSource:
      return "source " + std::to_string(vertex) + " repeated at position " + std::to_string(position);
    case Rule::kSourceAlreadyBurned:
      return "source already burned: " + std::to_string(vertex) + " at position " +
             std::to_string(position);
    case Rule::kVertexUnburned:
      return "vertex " + std::to_string(vertex) + " unburned";
  }
  return "unknown";
}

std::size_t CenterSets::center_count() const {
  return std::accumulate(groups.begin(), groups.end(), std::size_t{0},
                         [](std::size_t acc, const Group& g) { return acc + g.centers.size(); });
}

const char* to_string(BadGuess::Reason r) {
  switch (r) {
    case BadGuess::Reason::kSmallRangesExhausted:
      return "small_ranges_exhausted";
    case BadGuess::Reason::kAllRangesExhausted:
      return "all_ranges_exhausted";
    case BadGuess::Reason::kTooManyCenters:
      return "too_many_centers";
    case BadGuess::Reason::kTooManyMergeCenters:
      return "too_many_merge_centers";
    case BadGuess::Reason::kUncovered:
      return "uncovered";
    case BadGuess::Reason::kRangeBudgetExhausted:
      return "range_budget_exhausted";
  }
  return "unknown";
}

SimulationResult simulate(const UndirectedGraph& g, const BurningSchedule& s) { return simulate_impl(g, s); }
SimulationResult simulate(const DirectedTree& t, const BurningSchedule& s) { return simulate_impl(t, s); }
Verdict validate(const UndirectedGraph& g, const BurningSchedule& s) { return validate_impl(g, s); }
Verdict validate(const DirectedTree& t, const BurningSchedule& s) { return validate_impl(t, s); }

BurningSchedule assemble(const UndirectedGraph& g, const CenterSets& centers, std::size_t length) {
  return assemble_impl(g, centers, length);
}
BurningSchedule assemble(const DirectedTree& t, const CenterSets& centers, std::size_t length) {
  return assemble_impl(t, centers, length);
}

}  // namespace burnlab
