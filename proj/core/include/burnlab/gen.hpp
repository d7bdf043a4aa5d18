#pragma once

// Seeded random instances.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by
// the C++ standard, mapped to bounded integers by rejection sampling here
// rather than through the implementation-defined standard distributions.
// A seed therefore names the same graph on every platform.
//
// All three classes start from a random recursive tree in which vertex i
// attaches to a parent drawn from the previous w = max(2, ceil(sqrt(n)))
// vertices, so depth grows like sqrt(n). Cactus cycles come from chords
// spanning 2 to 6 tree edges. Labels are shuffled at the end.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>

#include "burnlab/graph.hpp"
#include "burnlab/graph_io.hpp"

namespace burnlab {

enum class GraphClass { kCactus, kPolytree, kArborescence };

const char* to_string(GraphClass c);
std::optional<GraphClass> parse_graph_class(std::string_view name);

struct GenSpec {
  GraphClass cls = GraphClass::kCactus;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  // Cactus only: target number of cycles as a fraction of n, in [0, 0.5].
  // The default gives |E|/|V| close to 1.08.
  double cycle_fraction = 0.08;
  // Trees only: cap on children per vertex, 0 for no cap.
  std::size_t max_out_degree = 0;
};

// Throws InvalidInput for n = 0, knobs out of range, or a class mismatch.
UndirectedGraph random_cactus(const GenSpec& spec);
DirectedTree random_arborescence(const GenSpec& spec);
// At least two roots once n >= 3.
DirectedTree random_polytree(const GenSpec& spec);

AnyGraph generate(const GenSpec& spec);

// <dir>/<class>/n<k>_s<seed>.graph
std::filesystem::path fixture_path(const std::filesystem::path& dir, const GenSpec& spec);

}  // namespace burnlab
