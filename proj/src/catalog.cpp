#include "bei/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "bei/error.hpp"
#include "bei/graph_io.hpp"
#include "bei/isomorphism.hpp"

namespace bei {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::invalid_argument, "cycles need at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

Graph star_graph(int k) {
  std::vector<Edge> edges;
  for (int v = 1; v <= k; ++v) edges.push_back({0, v});
  return Graph(k + 1, edges);
}

Graph empty_graph(int n) { return Graph(n, std::span<const Edge>{}); }

std::optional<Graph> named_graph(std::string_view name) {
  if (name.size() < 2) return std::nullopt;
  int n = 0;
  auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 0) return std::nullopt;
  switch (name[0]) {
    case 'K': return n >= 1 ? std::optional(complete_graph(n)) : std::nullopt;
    case 'P': return n >= 1 ? std::optional(path_graph(n)) : std::nullopt;
    case 'C': return n >= 3 ? std::optional(cycle_graph(n)) : std::nullopt;
    case 'S': return n >= 1 ? std::optional(star_graph(n)) : std::nullopt;
    default: return std::nullopt;
  }
}

namespace {

bool catalog_less(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return to_graph6(a) < to_graph6(b);
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "negative vertex count");
  if (n > 8) throw Error(ErrorCode::bound_exceeded, "graph catalogue is limited to 8 vertices");
  std::vector<Graph> level{Graph()};
  for (int k = 1; k <= n; ++k) {
    // Every graph on k vertices arises from one on k-1 vertices by adding a
    // vertex with some neighbourhood.
    std::map<std::string, Graph> seen;
    for (const auto& g : level) {
      auto base = g.edges();
      for (std::uint32_t nb = 0; nb < (1U << (k - 1)); ++nb) {
        auto edges = base;
        for (int v = 0; v < k - 1; ++v) {
          if ((nb >> v) & 1U) edges.push_back({v, k - 1});
        }
        Graph canon = canonical_form(Graph(k, edges), 8);
        seen.emplace(to_graph6(canon), std::move(canon));
      }
    }
    level.clear();
    for (auto& [code, g] : seen) level.push_back(std::move(g));
  }
  std::sort(level.begin(), level.end(), catalog_less);
  return level;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = connected_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace bei
