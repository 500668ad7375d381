#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "bei/graph.hpp"

namespace bei {

/// graph6 as written by nauty's showg/geng: N(n) followed by the upper
/// triangle column by column, six bits per printable byte.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
Graph from_graph6(std::string_view text);

/// One "u v" pair per line, a lone token declares an isolated vertex, '#'
/// starts a comment.  All-integer tokens are 0-based indices; otherwise
/// tokens are labels numbered by first appearance.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
/// Writes labels when the graph has them, indices otherwise.
std::string to_edge_list(const Graph& g);

std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace bei
