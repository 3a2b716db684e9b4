#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "gel/graph.hpp"

namespace gel {

// graph6: size header N(n) followed by the upper triangle, column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte plus 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Edge list: "p q" on the first line, then q lines "i j" with 0-based i < j.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);

// Reads a graph file, sniffing the format: a first token that parses as an
// integer selects the edge-list reader, anything else is taken as graph6.
Graph read_graph_file(const std::filesystem::path& file);

}  // namespace gel
