#include "bei/blocks.hpp"

#include <algorithm>

#include "bei/error.hpp"

namespace bei {

namespace {

// Hopcroft-Tarjan with an explicit edge stack.
class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g)
      : cuts_(g.order()),
        g_(g),
        disc_(static_cast<std::size_t>(g.order()), -1),
        low_(static_cast<std::size_t>(g.order()), 0) {}

  void run() {
    visit(0, -1);
    if (g_.order() == 1) blocks_.push_back(VertexSet::of(1, {0}));
  }

  std::vector<VertexSet> blocks_;
  VertexSet cuts_;

 private:
  void visit(int u, int parent) {
    disc_[u] = low_[u] = timer_++;
    int children = 0;
    for (int w : g_.neighbors(u)) {
      if (disc_[w] < 0) {
        ++children;
        stack_.push_back({u, w});
        visit(w, u);
        low_[u] = std::min(low_[u], low_[w]);
        if (low_[w] >= disc_[u]) {
          if (parent >= 0 || children > 1) cuts_.insert(u);
          pop_block(u, w);
        }
      } else if (w != parent && disc_[w] < disc_[u]) {
        stack_.push_back({u, w});
        low_[u] = std::min(low_[u], disc_[w]);
      }
    }
    if (parent < 0 && children > 1) cuts_.insert(u);
  }

  void pop_block(int u, int w) {
    VertexSet block(g_.order());
    while (!stack_.empty()) {
      Edge e = stack_.back();
      stack_.pop_back();
      block.insert(e.u);
      block.insert(e.v);
      if (e.u == u && e.v == w) break;
    }
    blocks_.push_back(std::move(block));
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<Edge> stack_;
  int timer_ = 0;
};

}  // namespace

int max_blocks_per_vertex(const BlockDecomposition& d, int order) {
  int best = 0;
  for (int v = 0; v < order; ++v) {
    int c = 0;
    for (const auto& b : d.blocks) c += b.contains(v) ? 1 : 0;
    best = std::max(best, c);
  }
  return best;
}

BlockDecomposition block_decomposition(const Graph& g) {
  if (g.order() == 0) {
    throw Error(ErrorCode::precondition, "block decomposition of the empty graph");
  }
  if (!is_connected(g)) {
    throw Error(ErrorCode::disconnected, "block decomposition needs a connected graph");
  }
  BlockFinder finder(g);
  finder.run();

  BlockDecomposition out;
  out.blocks = std::move(finder.blocks_);
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first() ||
                (a.first() == b.first() && canonical_less(a, b)); });
  out.cut_vertices = std::move(finder.cuts_);

  bool all_cliques = std::all_of(out.blocks.begin(), out.blocks.end(),
                                 [&](const VertexSet& b) { return is_clique(g, b); });
  if (!all_cliques) return out;

  const int k = static_cast<int>(out.blocks.size());
  // Block adjacency through shared cut vertices.
  std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(k));
  for (int c : out.cut_vertices) {
    std::vector<int> owners;
    for (int i = 0; i < k; ++i) {
      if (out.blocks[i].contains(c)) owners.push_back(i);
    }
    if (owners.size() != 2) return out;
    neighbours[owners[0]].push_back(owners[1]);
    neighbours[owners[1]].push_back(owners[0]);
  }
  int start = -1;
  for (int i = 0; i < k; ++i) {
    if (neighbours[i].size() > 2) return out;
    if (neighbours[i].size() <= 1 && start < 0) start = i;
  }
  // A block tree whose cut vertices have exactly two owners is a tree, so an
  // end block exists whenever every degree is at most two.
  if (start < 0) return out;
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (int cur = start, prev = -1; cur >= 0;) {
    out.block_order.push_back(cur);
    seen[cur] = true;
    int next = -1;
    for (int nb : neighbours[cur]) {
      if (nb != prev && !seen[nb]) next = nb;
    }
    prev = cur;
    cur = next;
  }
  out.is_clique_path = static_cast<int>(out.block_order.size()) == k;
  if (!out.is_clique_path) out.block_order.clear();
  return out;
}

bool is_block_graph(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) return false;
  auto d = block_decomposition(g);
  return std::all_of(d.blocks.begin(), d.blocks.end(),
                     [&](const VertexSet& b) { return is_clique(g, b); });
}

bool is_cm_closed(const Graph& g) { return block_decomposition(g).is_clique_path; }

}  // namespace bei
