#include "doctest.h"

#include "bei/blocks.hpp"
#include "bei/catalog.hpp"
#include "bei/graph.hpp"

using namespace bei;

TEST_CASE("block decomposition of a path and a star") {
  const auto p = block_decomposition(path_graph(4));
  CHECK(p.blocks.size() == 3);
  CHECK(p.cut_vertices.to_vector() == std::vector<int>{1, 2});
  CHECK(p.is_clique_path);

  const auto s = block_decomposition(star_graph(3));
  CHECK(s.blocks.size() == 3);
  CHECK(max_blocks_per_vertex(s, 4) == 3);
  CHECK_FALSE(s.is_clique_path);
}

TEST_CASE("block graphs and CM-closed graphs") {
  CHECK(is_block_graph(complete_graph(5)));
  CHECK(is_block_graph(star_graph(4)));
  CHECK_FALSE(is_block_graph(cycle_graph(4)));
  CHECK(is_cm_closed(path_graph(5)));
  CHECK(is_cm_closed(complete_graph(3)));
  CHECK_FALSE(is_cm_closed(star_graph(3)));
  CHECK_FALSE(is_cm_closed(cycle_graph(5)));

  // Two triangles sharing a vertex form a clique path.
  const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(is_cm_closed(bowtie));
  const auto d = block_decomposition(bowtie);
  CHECK(d.blocks.size() == 2);
  CHECK(d.cut_vertices.to_vector() == std::vector<int>{2});
}

TEST_CASE("single vertex is one block") {
  const auto d = block_decomposition(complete_graph(1));
  CHECK(d.blocks.size() == 1);
  CHECK(d.cut_vertices.empty());
}
