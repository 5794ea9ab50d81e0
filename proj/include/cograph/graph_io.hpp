#pragma once

#include "cograph/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace cograph {

/// graph6 encoding: N(n) header then the upper triangle column by column,
/// packed six bits per byte with offset 63. An optional ">>graph6<<" prefix
/// and trailing newline are accepted on input.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// Plain text: first token n, then one "u v" pair per line. Lines starting
/// with '#' are comments.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

}  // namespace cograph
