#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bei/vertex_set.hpp"

namespace bei {

struct Edge {
  int u;
  int v;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices [0, n).  Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Duplicate edges are merged; self-loops and out-of-range endpoints throw.
  Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});
  Graph(int n, std::initializer_list<Edge> edges, std::vector<std::string> labels = {})
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(labels)) {}

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int size() const noexcept { return edge_count_; }

  const VertexSet& neighbors(int v) const;
  bool adjacent(int u, int v) const;
  int degree(int v) const { return neighbors(v).count(); }
  VertexSet vertices() const { return VertexSet::full(order()); }

  /// Edges {u,v} with u < v, ascending by (u, v).
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// The stored label, or the decimal index when the graph is unlabeled.
  std::string label(int v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  /// Adjacency equality; labels are not compared.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  void check_vertex(int v) const;

  std::vector<VertexSet> adjacency_;
  std::vector<std::string> labels_;
  int edge_count_ = 0;
};

/// Old/new index maps of an induced subgraph.  old_to_new holds -1 for
/// dropped vertices.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;
};

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_clique(const Graph& g, const VertexSet& s);

/// Connected components of g minus `removed`, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);
int component_count(const Graph& g, const VertexSet& removed);
int component_count(const Graph& g);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);
/// Largest pairwise distance; nullopt when g is disconnected.
std::optional<int> diameter(const Graph& g);

/// g plus every edge between two neighbours of v.
Graph cliquify(const Graph& g, int v);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed);

/// g1's vertices keep their indices; g2's are shifted by |V(g1)|.
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// New apex with the highest index, adjacent to everything.
Graph cone(const Graph& g);
Graph join(const Graph& g1, const Graph& g2);

/// v is simplicial iff N(v) is a clique.
VertexSet simplicial_vertices(const Graph& g);
int internal_vertex_count(const Graph& g);

}  // namespace bei
