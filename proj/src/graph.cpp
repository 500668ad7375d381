#include "bei/graph.hpp"

#include <algorithm>
#include <deque>

#include "bei/error.hpp"

namespace bei {

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw Error(ErrorCode::invalid_argument, "label count does not match vertex count");
  }
  adjacency_.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::invalid_vertex,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::invalid_argument,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    adjacency_[e.u].insert(e.v);
    adjacency_[e.v].insert(e.u);
  }
  int degree_sum = 0;
  for (const auto& row : adjacency_) degree_sum += row.count();
  edge_count_ = degree_sum / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw Error(ErrorCode::invalid_vertex,
                "vertex " + std::to_string(v) + " outside [0, " +
                    std::to_string(order()) + ")");
  }
}

const VertexSet& Graph::neighbors(int v) const {
  check_vertex(v);
  return adjacency_[v];
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[u].contains(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order(); ++u) {
    for (int v : adjacency_[u]) {
      if (v > u) out.push_back({u, v});
    }
  }
  return out;
}

std::string Graph::label(int v) const {
  check_vertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  auto e = edges();
  return Graph(order(), e, std::move(labels));
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_clique(const Graph& g, const VertexSet& s) {
  for (int v : s) {
    VertexSet others = s;
    others.erase(v);
    if (!others.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_complete(const Graph& g) {
  return g.size() == g.order() * (g.order() - 1) / 2;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  const int n = g.order();
  VertexSet remaining = VertexSet::full(n) - removed;
  std::vector<VertexSet> out;
  while (!remaining.empty()) {
    VertexSet comp(n);
    VertexSet frontier(n);
    frontier.insert(remaining.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(n);
      for (int v : frontier) next |= g.neighbors(v);
      next &= remaining;
      next -= comp;
      frontier = std::move(next);
    }
    remaining -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

int component_count(const Graph& g, const VertexSet& removed) {
  return static_cast<int>(components(g, removed).size());
}

int component_count(const Graph& g) { return component_count(g, VertexSet(g.order())); }

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  g.neighbors(source);  // validates
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

Graph cliquify(const Graph& g, int v) {
  const VertexSet& nb = g.neighbors(v);
  auto edges = g.edges();
  for (int a : nb) {
    for (int b : nb) {
      if (a < b && !g.adjacent(a, b)) edges.push_back({a, b});
    }
  }
  return Graph(g.order(), edges, g.labels());
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v : keep) {
    if (v >= g.order()) break;
    out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    int a = out.old_to_new[e.u];
    int b = out.old_to_new[e.v];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (int old : out.new_to_old) labels.push_back(g.labels()[old]);
  }
  out.graph = Graph(static_cast<int>(out.new_to_old.size()), edges, std::move(labels));
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  return induced_subgraph(g, VertexSet::full(g.order()) - removed);
}

namespace {

std::vector<std::string> merged_labels(const Graph& g1, const Graph& g2) {
  if (!g1.has_labels() && !g2.has_labels()) return {};
  std::vector<std::string> labels;
  for (int v = 0; v < g1.order(); ++v) labels.push_back(g1.label(v));
  for (int v = 0; v < g2.order(); ++v) labels.push_back(g2.label(v) + "'");
  return labels;
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int shift = g1.order();
  auto edges = g1.edges();
  for (const auto& e : g2.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(g1.order() + g2.order(), edges, merged_labels(g1, g2));
}

Graph cone(const Graph& g) {
  const int apex = g.order();
  auto edges = g.edges();
  for (int v = 0; v < apex; ++v) edges.push_back({v, apex});
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels = g.labels();
    labels.push_back("apex");
  }
  return Graph(apex + 1, edges, std::move(labels));
}

Graph join(const Graph& g1, const Graph& g2) {
  const int shift = g1.order();
  auto edges = disjoint_union(g1, g2).edges();
  for (int a = 0; a < g1.order(); ++a) {
    for (int b = 0; b < g2.order(); ++b) edges.push_back({a, b + shift});
  }
  return Graph(g1.order() + g2.order(), edges, merged_labels(g1, g2));
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (is_clique(g, g.neighbors(v))) out.insert(v);
  }
  return out;
}

int internal_vertex_count(const Graph& g) {
  return g.order() - simplicial_vertices(g).count();
}

}  // namespace bei
