#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tokens/graph.hpp"

namespace tokens {

// graph6 is the compact ASCII encoding used by nauty and friends: the order n
// (one byte n+63 for n <= 62, or 126 followed by three bytes of 18-bit
// big-endian n for n <= 258047), then the upper triangle of the adjacency
// matrix read column by column, packed into 6-bit groups, each +63.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Reads one graph per line. Blank lines and lines starting with '#' are
// skipped, as is an optional ">>graph6<<" header.
std::vector<Graph> read_graph6_file(const std::string& path);
std::vector<std::string> read_graph6_lines(const std::string& path);

}  // namespace tokens
