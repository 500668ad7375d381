#pragma once

#include <vector>

#include "bei/graph.hpp"

namespace bei {

struct BlockDecomposition {
  /// Biconnected components (bridges and isolated-vertex blocks included),
  /// ordered by smallest member.
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  /// Every block is a clique, every cut vertex lies in exactly two blocks and
  /// the blocks line up as a path.
  bool is_clique_path = false;
  /// Indices into `blocks` in path order when is_clique_path holds.
  std::vector<int> block_order;
};

/// Requires a connected graph with at least one vertex.
BlockDecomposition block_decomposition(const Graph& g);

/// Connected and every block a clique.
bool is_block_graph(const Graph& g);

/// Cohen-Macaulay closed graphs are exactly the clique paths.
bool is_cm_closed(const Graph& g);

/// Largest number of blocks sharing one vertex.
int max_blocks_per_vertex(const BlockDecomposition& d, int order);

}  // namespace bei
