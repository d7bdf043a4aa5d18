#pragma once

// Plain-text graph format:
//
//   u <n> <m>        (or "d <n> <m>" for a directed graph)
//   <a> <b>          m lines, 0-indexed; an undirected edge or the arc a->b
//
// Writing keeps edge order, so parse -> write reproduces canonical text
// byte for byte.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "burnlab/graph.hpp"

namespace burnlab {

using AnyGraph = std::variant<UndirectedGraph, DirectedTree>;

std::string to_text(const UndirectedGraph& g);
std::string to_text(const DirectedTree& t);
std::string to_text(const AnyGraph& g);

// Throws InvalidInput with a line number on malformed input.
AnyGraph parse_graph(std::string_view text);

AnyGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const AnyGraph& g);

}  // namespace burnlab
