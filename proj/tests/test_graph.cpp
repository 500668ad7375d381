#include "doctest.h"

#include "bei/catalog.hpp"
#include "bei/error.hpp"
#include "bei/graph.hpp"
#include "bei/isomorphism.hpp"
#include "oracles.hpp"

using namespace bei;

TEST_CASE("vertex sets iterate in ascending order and compare canonically") {
  auto s = VertexSet::of(70, {65, 3, 0, 64});
  CHECK(s.to_vector() == std::vector<int>{0, 3, 64, 65});
  CHECK(s.count() == 4);
  CHECK(s.first() == 0);
  CHECK(s.to_string() == "{0,3,64,65}");
  CHECK(s.complement().count() == 66);

  auto a = VertexSet::of(5, {4});
  auto b = VertexSet::of(5, {0, 1});
  auto c = VertexSet::of(5, {0, 2});
  CHECK(canonical_less(a, b));
  CHECK(canonical_less(b, c));
  CHECK_FALSE(canonical_less(c, b));
  CHECK(canonical_less_mask(a.mask(), b.mask()));
  CHECK(canonical_less_mask(b.mask(), c.mask()));
  CHECK(VertexSet::from_mask(5, c.mask()) == c);
}

TEST_CASE("graph construction validates edges and merges duplicates") {
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
  CHECK(g.label(2) == "2");
}

TEST_CASE("components, distances and diameter agree with brute force") {
  for (const auto& g : connected_graphs_up_to(5)) {
    CHECK(diameter(g).value() == oracle::diameter(g));
    const auto d = oracle::distances(g);
    for (int s = 0; s < g.order(); ++s) CHECK(bfs_distances(g, s) == d[s]);
    for (std::uint64_t m = 0; m < (1U << g.order()); ++m) {
      CHECK(component_count(g, VertexSet::from_mask(g.order(), m)) == oracle::components(g, m));
    }
  }
  CHECK_FALSE(diameter(Graph(2, std::span<const Edge>{})).has_value());
}

TEST_CASE("graph operations") {
  const Graph p3 = path_graph(3);
  const Graph c = cone(p3);
  CHECK(c.order() == 4);
  CHECK(c.degree(3) == 3);
  CHECK(is_complete(cliquify(p3, 1)));

  const Graph u = disjoint_union(complete_graph(2), complete_graph(3));
  CHECK(u.order() == 5);
  CHECK(u.size() == 4);
  CHECK(component_count(u) == 2);
  CHECK(u.adjacent(2, 4));

  const Graph j = join(empty_graph(2), empty_graph(2));
  CHECK(is_isomorphic_small(j, cycle_graph(4)));

  const auto sub = delete_vertices(path_graph(4), VertexSet::of(4, {1}));
  CHECK(sub.graph.order() == 3);
  CHECK(sub.old_to_new[1] == -1);
  CHECK(sub.new_to_old == std::vector<int>{0, 2, 3});
}

TEST_CASE("simplicial and internal vertices") {
  CHECK(simplicial_vertices(path_graph(4)).to_vector() == std::vector<int>{0, 3});
  CHECK(internal_vertex_count(path_graph(4)) == 2);
  CHECK(internal_vertex_count(complete_graph(5)) == 0);
  CHECK(internal_vertex_count(star_graph(3)) == 1);
  CHECK(internal_vertex_count(cycle_graph(5)) == 5);
}

TEST_CASE("catalogue sizes match the known counts of connected graphs") {
  const int expected[] = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) CHECK(connected_graphs(n).size() == expected[n - 1]);
  CHECK(all_graphs(4).size() == 11);
  CHECK_THROWS_AS(all_graphs(9), Error);
}

TEST_CASE("named graphs") {
  CHECK(named_graph("K4")->size() == 6);
  CHECK(named_graph("P5")->size() == 4);
  CHECK(named_graph("C5")->size() == 5);
  CHECK(named_graph("S3")->order() == 4);
  CHECK_FALSE(named_graph("C2"));
  CHECK_FALSE(named_graph("X3"));
  CHECK_FALSE(named_graph("K"));
}

TEST_CASE("isomorphism and canonical forms") {
  const Graph a(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph b(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(is_isomorphic_small(a, b));
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK_FALSE(is_isomorphic_small(a, star_graph(3)));
}
