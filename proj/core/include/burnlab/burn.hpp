#pragma once

// Burning-process semantics.
//
// A schedule v_0, ..., v_{L-1} ignites v_i in round i+1. Within a round the
// new source must still be unburned when the round starts; fire then spreads
// one hop from everything already burning and the source catches fire. After
// L rounds source i has spread L-1-i hops, so the burned set is the union of
// the balls N_{L-1-i}[v_i].

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "burnlab/graph.hpp"

namespace burnlab {

// Exact non-negative rational, used for range coefficients such as 1.75.
struct Ratio {
  std::int64_t num;
  std::int64_t den;
};

namespace coeff {
inline constexpr Ratio kQuarter{1, 4};
inline constexpr Ratio kThreeQuarters{3, 4};
inline constexpr Ratio kSevenQuarters{7, 4};
inline constexpr Ratio kElevenQuarters{11, 4};
inline constexpr Ratio kMergeReach{81, 100};
inline constexpr Ratio kMergeRange{181, 100};
inline constexpr Ratio kArborescenceFactor{381, 200};
inline constexpr Ratio kPathStrip{19, 100};
}  // namespace coeff

// ceil(b * k) in integer arithmetic. Requires b >= 1, k >= 0.
std::int64_t ceil_range(std::int64_t b, Ratio k);

struct BurningSchedule {
  std::vector<VertexId> sources;

  std::size_t length() const noexcept { return sources.size(); }
  // Radius of the source at `position` once all length() rounds ran.
  std::int64_t radius_at(std::size_t position) const {
    return static_cast<std::int64_t>(sources.size()) - 1 - static_cast<std::int64_t>(position);
  }
  friend bool operator==(const BurningSchedule&, const BurningSchedule&) = default;
};

// One line, space separated ids.
std::string to_line(const BurningSchedule& s);
// Accepts any whitespace between ids; throws InvalidInput on junk.
BurningSchedule parse_schedule(std::string_view text);

struct SimulationResult {
  std::vector<char> burned;  // per vertex, after all rounds
  std::size_t burned_count = 0;
  // Smallest round after which every vertex burns; absent if some never do.
  std::optional<std::size_t> rounds_to_cover;
};

// Throws InvalidSchedule if a source is out of range, repeated, or already
// burning when its round starts.
SimulationResult simulate(const UndirectedGraph& g, const BurningSchedule& s);
SimulationResult simulate(const DirectedTree& t, const BurningSchedule& s);

struct Verdict {
  enum class Rule {
    kAccepted,
    kSourceOutOfRange,
    kRepeatedSource,
    kSourceAlreadyBurned,
    kVertexUnburned,
  };
  Rule rule = Rule::kAccepted;
  std::size_t position = 0;  // offending schedule position, when relevant
  VertexId vertex = -1;      // offending vertex

  bool accepted() const noexcept { return rule == Rule::kAccepted; }
  std::string describe() const;
};

Verdict validate(const UndirectedGraph& g, const BurningSchedule& s);
Verdict validate(const DirectedTree& t, const BurningSchedule& s);

// Fire centers an algorithm wants, each group with the radius its members
// must receive. Groups are disjoint.
struct CenterSets {
  struct Group {
    std::vector<VertexId> centers;
    std::int64_t radius = 0;
  };
  std::vector<Group> groups;

  std::size_t center_count() const;
};

// Per-guess failure: the guessed b is below the burning number.
struct BadGuess {
  enum class Reason {
    kSmallRangesExhausted,  // cactus: no cut vertex in the window and no 2b-2 range left
    kAllRangesExhausted,    // more than b pairwise far-apart centers needed
    kTooManyCenters,        // |BS| > b
    kTooManyMergeCenters,   // |BS'| > b
    kUncovered,             // iteration cap reached with vertices left
    kRangeBudgetExhausted,  // merge-and-burn ran out of ranges >= b
  };
  Reason reason;
};

const char* to_string(BadGuess::Reason r);

using GuessOutcome = std::variant<CenterSets, BadGuess>;

inline bool is_bad_guess(const GuessOutcome& o) { return std::holds_alternative<BadGuess>(o); }

// Turns center sets into a schedule of at most `length` sources.
//
// Centers are placed from position 0 in order of non-increasing radius; the
// center at position i must satisfy length-1-i >= its radius or Infeasible is
// thrown. A center that is already burning when its round starts is dropped
// (an earlier, wider fire already contains its ball) and its slot becomes a
// filler. Filler slots take the smallest-id unburned vertex. The schedule
// stops at the first round after which everything burns; if that does not
// happen within `length` rounds, Infeasible is thrown.
BurningSchedule assemble(const UndirectedGraph& g, const CenterSets& centers, std::size_t length);
BurningSchedule assemble(const DirectedTree& t, const CenterSets& centers, std::size_t length);

// Result of a full approximation driver.
struct ApproxResult {
  BurningSchedule schedule;
  std::int64_t b_star = 0;  // first guess that succeeded
  std::int64_t bound = 0;   // schedule length the guarantee allows at b_star
};

}  // namespace burnlab
