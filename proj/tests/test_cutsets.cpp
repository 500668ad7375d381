#include "doctest.h"

#include <cstdlib>

#include "bei/catalog.hpp"
#include "bei/corona.hpp"
#include "bei/cutsets.hpp"
#include "bei/error.hpp"
#include "oracles.hpp"

using namespace bei;

namespace {

std::vector<std::uint64_t> masks(const CutsetReport& r) {
  std::vector<std::uint64_t> out;
  for (const auto& t : r.cutsets) out.push_back(t.mask());
  return out;
}

Graph figure1_corona() {
  return l_corona({oracle::figure1_base(), VertexSet::of(6, {1, 2}), complete_graph(2)}).graph;
}

}  // namespace

TEST_CASE("is_cutset basics") {
  CHECK(is_cutset(complete_graph(4), VertexSet(4)));
  for (int v = 0; v < 4; ++v) CHECK_FALSE(is_cutset(complete_graph(4), VertexSet::of(4, {v})));
  CHECK(is_cutset(figure1_corona(), VertexSet::of(10, {0, 2})));
}

TEST_CASE("small enumerations") {
  CHECK(masks(enumerate_cutsets(complete_graph(4))) == std::vector<std::uint64_t>{0});
  CHECK(masks(enumerate_cutsets(path_graph(3))) == std::vector<std::uint64_t>{0, 0b010});
  CHECK(masks(enumerate_cutsets(path_graph(4))) ==
        std::vector<std::uint64_t>{0, 0b0010, 0b0100});
  const auto c4 = enumerate_cutsets(cycle_graph(4));
  CHECK(masks(c4) == std::vector<std::uint64_t>{0, 0b0101, 0b1010});
  CHECK(c4.components == std::vector<int>{1, 2, 2});
  CHECK_FALSE(c4.is_unmixed);
}

TEST_CASE("enumeration equals the definitional scan on every graph up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : all_graphs(n)) {
      const auto report = enumerate_cutsets(g, {.jobs = 1});
      auto expected = oracle::cutsets(g);
      std::sort(expected.begin(), expected.end(), canonical_less_mask);
      REQUIRE(masks(report) == expected);
      CHECK(report.oracle_dimension == oracle::dimension(g));
      CHECK(report.is_unmixed == oracle::is_unmixed(g));
      CHECK((report.is_unmixed && report.is_accessible_system) == oracle::is_accessible(g));
      CHECK(report.disconnected_extension == !is_connected(g));
      const auto simplicial = simplicial_vertices(g);
      for (const auto& t : report.cutsets) CHECK_FALSE(t.intersects(simplicial));
    }
  }
}

TEST_CASE("threaded enumeration gives the same report") {
  const Graph g = corona(cycle_graph(5), path_graph(2)).graph;
  const auto one = enumerate_cutsets(g, {.jobs = 1});
  const auto many = enumerate_cutsets(g, {.jobs = 4});
  CHECK(one.cutsets == many.cutsets);
  CHECK(one.components == many.components);
  CHECK(one.oracle_dimension == many.oracle_dimension);
}

TEST_CASE("unmixed, accessible and dimension examples") {
  CHECK(is_unmixed(complete_graph(5)));
  CHECK(is_accessible(complete_graph(5)));
  CHECK(dimension_oracle(complete_graph(5)) == 6);
  CHECK(is_accessible(path_graph(4)));
  CHECK(is_unmixed(oracle::figure1_base()));

  const Graph fig = figure1_corona();
  CHECK_FALSE(is_unmixed(fig));
  CHECK_FALSE(is_accessible(fig));
  const auto witness = unmixed_witness(fig);
  REQUIRE(witness);
  CHECK(*witness == VertexSet::of(10, {0, 2}));

  // K2 with one attached P3 has 5 vertices and dimension 6.
  const Graph k2p3 = l_corona({complete_graph(2), VertexSet::of(2, {0}), path_graph(3)}).graph;
  CHECK(dimension_oracle(k2p3) == 6);

  // Full corona with an unmixed pendant: n + nh + 1.
  for (int n = 1; n <= 3; ++n) {
    for (int h = 1; h <= 3; ++h) {
      CHECK(dimension_oracle(corona(complete_graph(n), path_graph(h)).graph) == n + n * h + 1);
    }
  }
}

TEST_CASE("size cap marks the report incomplete") {
  const auto r = enumerate_cutsets(path_graph(6), {.size_cap = 1});
  CHECK_FALSE(r.complete);
  for (const auto& t : r.cutsets) CHECK(t.count() <= 1);
  CHECK(r.cutsets.size() == 5);
}

TEST_CASE("bounds") {
  CHECK_THROWS_AS(enumerate_cutsets(path_graph(6), {.bound = 5}), Error);
  try {
    enumerate_cutsets(path_graph(30));
    FAIL("expected bound_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::bound_exceeded);
  }

  ::setenv("BEI_BOUND", "4", 1);
  CHECK(default_enumeration_bound() == 4);
  CHECK_THROWS_AS(enumerate_cutsets(path_graph(5)), Error);
  ::setenv("BEI_BOUND", "65", 1);
  CHECK_THROWS_AS(default_enumeration_bound(), Error);
  ::setenv("BEI_BOUND", "abc", 1);
  CHECK_THROWS_AS(default_enumeration_bound(), Error);
  ::unsetenv("BEI_BOUND");
  CHECK(default_enumeration_bound() == kDefaultEnumerationBound);
}

TEST_CASE("witness chains") {
  CHECK(accessibility_witness_chain(path_graph(4), VertexSet(4))->empty());
  CHECK(*accessibility_witness_chain(path_graph(4), VertexSet::of(4, {1})) == std::vector<int>{1});
  CHECK_THROWS_AS(accessibility_witness_chain(path_graph(4), VertexSet::of(4, {0})), Error);

  // Some cutset of the Figure-1 corona has no removal chain.
  const Graph fig = figure1_corona();
  bool some_fail = false;
  for (const auto& t : enumerate_cutsets(fig).cutsets) {
    some_fail = some_fail || !accessibility_witness_chain(fig, t).has_value();
  }
  CHECK(some_fail == !is_accessible_system(fig));
}

TEST_CASE("JSON output") {
  const auto g = path_graph(3);
  const auto json = to_json(enumerate_cutsets(g), g);
  CHECK(json.find("\"count\":2") != std::string::npos);
  CHECK(json.find("\"unmixed_witness\":null") != std::string::npos);
  const auto lines = to_jsonl(enumerate_cutsets(g), g);
  CHECK(lines == "{\"set\":[],\"components\":1}\n{\"set\":[1],\"components\":2}\n");
}
