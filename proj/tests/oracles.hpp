#pragma once

// Brute-force reference implementations used only by the tests.  They share
// nothing with the library beyond the Graph accessors.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "bei/graph.hpp"

namespace oracle {

// Union-find over the edges that survive removal of `removed` (bitmask).
inline int components(const bei::Graph& g, std::uint64_t removed) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    if ((removed >> e.u) & 1U || (removed >> e.v) & 1U) continue;
    parent[find(e.u)] = find(e.v);
  }
  int count = 0;
  for (int v = 0; v < n; ++v) {
    if (!((removed >> v) & 1U) && find(v) == v) ++count;
  }
  return count;
}

// The definition verbatim: ω(G∖(T∖v)) < ω(G∖T) for every v in T.
inline bool is_cutset(const bei::Graph& g, std::uint64_t t) {
  const int omega = oracle::components(g, t);
  for (int v = 0; v < g.order(); ++v) {
    if (((t >> v) & 1U) && oracle::components(g, t & ~(std::uint64_t{1} << v)) >= omega) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> cutsets(const bei::Graph& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << g.order()); ++t) {
    if (oracle::is_cutset(g, t)) out.push_back(t);
  }
  return out;
}

inline int dimension(const bei::Graph& g) {
  int best = -1 << 20;
  for (auto t : oracle::cutsets(g)) {
    best = std::max(best, oracle::components(g, t) - static_cast<int>(__builtin_popcountll(t)));
  }
  return g.order() + best;
}

inline bool is_unmixed(const bei::Graph& g) {
  const int base = oracle::components(g, 0);
  for (auto t : oracle::cutsets(g)) {
    if (oracle::components(g, t) != static_cast<int>(__builtin_popcountll(t)) + base) return false;
  }
  return true;
}

inline bool is_accessible(const bei::Graph& g) {
  if (!oracle::is_unmixed(g)) return false;
  for (auto t : oracle::cutsets(g)) {
    if (t == 0) continue;
    bool ok = false;
    for (int v = 0; v < g.order() && !ok; ++v) {
      if ((t >> v) & 1U) ok = oracle::is_cutset(g, t & ~(std::uint64_t{1} << v));
    }
    if (!ok) return false;
  }
  return true;
}

// All-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const bei::Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

inline int diameter(const bei::Graph& g) {
  int best = 0;
  for (const auto& row : distances(g))
    for (int x : row) {
      if (x < 0) return -1;
      best = std::max(best, x);
    }
  return best;
}

// Corona built straight from the definition, independent of the layout code:
// base first, then copies in ascending attached-vertex order.
inline bei::Graph l_corona(const bei::Graph& base, const std::vector<int>& attach,
                           const bei::Graph& pendant) {
  std::vector<bei::Edge> edges = base.edges();
  int next = base.order();
  for (int v : attach) {
    for (int x = 0; x < pendant.order(); ++x) {
      edges.push_back({v, next + x});
      for (int y = x + 1; y < pendant.order(); ++y) {
        if (pendant.adjacent(x, y)) edges.push_back({next + x, next + y});
      }
    }
    next += pendant.order();
  }
  return bei::Graph(next, edges);
}

inline bei::Graph complete(int n) {
  std::vector<bei::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return bei::Graph(n, edges);
}

// Figure-1 base: 4-cycle u,v,w,x with pendants pu at u and px at x.
inline bei::Graph figure1_base() {
  return bei::Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {3, 5}},
                    {"u", "v", "w", "x", "pu", "px"});
}

}  // namespace oracle
