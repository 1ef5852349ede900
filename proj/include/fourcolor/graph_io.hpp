#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fourcolor/graph.hpp"

namespace fourcolor {

/// Parses one graph6 record (an optional ">>graph6<<" prefix and trailing
/// whitespace are accepted). Throws ParseError on a malformed size header,
/// a length mismatch, or a byte outside 63..126.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// "n m" header followed by m lines "u v". Blank lines and lines starting
/// with '#' are skipped.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Accepts either format: an edge list when the first token line has two
/// integers, graph6 otherwise.
Graph parse_graph_auto(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Vertex colours as "vertex color" pairs, one per line. Every vertex
/// 0..n-1 must appear exactly once.
std::vector<int> parse_assignment(std::string_view text, int n);
std::string emit_assignment(const std::vector<int>& colors);

std::string read_text_file(const std::string& path);

}  // namespace fourcolor
