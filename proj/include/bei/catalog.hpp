#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

Graph complete_graph(int n);
Graph path_graph(int n);
/// Requires n >= 3.
Graph cycle_graph(int n);
/// K_{1,k} with the centre at index 0.
Graph star_graph(int k);
Graph empty_graph(int n);

/// Shorthand names: Kn, Pn, Cn, Sn (star K_{1,n}).  nullopt when the text
/// is not such a name.
std::optional<Graph> named_graph(std::string_view name);

/// One representative per isomorphism class, in canonical form, sorted by
/// edge count and then graph6.  Practical up to n = 8.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);
/// Connected graphs on 1..max_n vertices, smallest first.
std::vector<Graph> connected_graphs_up_to(int max_n);

}  // namespace bei
