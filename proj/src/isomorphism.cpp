#include "bei/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "bei/error.hpp"

namespace bei {

namespace {

void check_bound(const Graph& g, int bound) {
  if (g.order() > bound) {
    throw Error(ErrorCode::bound_exceeded,
                "graph has " + std::to_string(g.order()) +
                    " vertices; isomorphism search is capped at " + std::to_string(bound));
  }
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b)
      : a_(a), b_(b), map_(static_cast<std::size_t>(a.order()), -1),
        used_(static_cast<std::size_t>(b.order()), false) {
    // Highest-degree vertices first prunes earliest.
    order_.resize(static_cast<std::size_t>(a.order()));
    for (int v = 0; v < a.order(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int x, int y) { return a.degree(x) > a.degree(y); });
  }

  bool search(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int w = 0; w < b_.order(); ++w) {
      if (used_[w] || a_.degree(v) != b_.degree(w) || !consistent(v, w, depth)) continue;
      map_[v] = w;
      used_[w] = true;
      if (search(depth + 1)) return true;
      used_[w] = false;
      map_[v] = -1;
    }
    return false;
  }

 private:
  bool consistent(int v, int w, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      int u = order_[i];
      if (a_.adjacent(u, v) != b_.adjacent(map_[u], w)) return false;
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// Colour refinement: recolour by (colour, sorted neighbour colours) until
// stable.  Colours are ranks of signatures, so the result is invariant under
// relabelling.
std::vector<int> refine(const Graph& g, std::vector<int> colors) {
  const int n = g.order();
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colors[v]);
      std::vector<int> nb;
      for (int w : g.neighbors(v)) nb.push_back(colors[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (int v = 0; v < n; ++v) colors[v] = rank[sig[v]];
    if (next == classes) return colors;
    classes = next;
  }
}

std::string adjacency_code(const Graph& g, const std::vector<int>& position) {
  const int n = g.order();
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) at[position[v]] = v;
  std::string code;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) code.push_back(g.adjacent(at[i], at[j]) ? '1' : '0');
  }
  return code;
}

struct Leaf {
  std::string code;
  std::vector<int> position;
};

void canonical_search(const Graph& g, const std::vector<int>& colors,
                      std::optional<Leaf>& best) {
  const int n = g.order();
  std::vector<int> cell_size(static_cast<std::size_t>(n), 0);
  for (int c : colors) ++cell_size[c];
  int target = -1;
  for (int c = 0; c < n; ++c) {
    if (cell_size[c] > 1) {
      target = c;
      break;
    }
  }
  if (target < 0) {
    auto code = adjacency_code(g, colors);
    if (!best || code < best->code) best = Leaf{std::move(code), colors};
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    std::vector<int> split(colors.size());
    for (int u = 0; u < n; ++u) split[u] = 2 * colors[u] + (u == v ? 0 : 1);
    canonical_search(g, refine(g, std::move(split)), best);
  }
}

}  // namespace

bool is_isomorphic_small(const Graph& g1, const Graph& g2, int bound) {
  check_bound(g1, bound);
  check_bound(g2, bound);
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
  if (degree_sequence(g1) != degree_sequence(g2)) return false;
  return Matcher(g1, g2).search();
}

Graph canonical_form(const Graph& g, int bound) {
  check_bound(g, bound);
  const int n = g.order();
  if (n == 0) return g;
  std::optional<Leaf> best;
  canonical_search(g, refine(g, std::vector<int>(static_cast<std::size_t>(n), 0)), best);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    int a = best->position[e.u];
    int b = best->position[e.v];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(n, edges);
}

}  // namespace bei
