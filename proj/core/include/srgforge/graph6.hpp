#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "srgforge/graph.hpp"

namespace srgforge {

/// graph6 encoding (upper triangle, column by column, 6 bits per character).
/// Only the 1- and 4-byte size headers are supported (n <= 258047).
std::string graph6_encode(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing newline/CR.
Graph graph6_decode(std::string_view text);

/// One graph per non-empty line.
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

/// Plain 0/1 adjacency matrix text: first line v, then v rows of v digits.
std::string adjacency_text(const Graph& g);
Graph parse_adjacency_text(std::string_view text);

}  // namespace srgforge
