#include <doctest.h>

#include <random>

#include "okforce/constructions.hpp"
#include "okforce/errors.hpp"
#include "okforce/forcing.hpp"
#include "okforce/generators.hpp"
#include "okforce/invariants.hpp"
#include "okforce/solver.hpp"

using namespace okf;

TEST_CASE("balanced orientations") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = gnp_graph(n, 0.4, rng());
    const OrientedGraph d = balanced_orientation(g);
    CHECK(d.underlying() == g);
    CHECK(is_balanced(d));
    for (int v = 0; v < n; ++v) CHECK(std::abs(d.out_degree(v) - d.in_degree(v)) <= 1);
  }
  const OrientedGraph c6 = balanced_orientation(cycle_graph(6));
  for (int v = 0; v < 6; ++v) CHECK(c6.out_degree(v) == 1);
}

TEST_CASE("orienting away from a maximum independent set of P6") {
  const Graph p6 = path_graph(6);
  const VertexSet i = VertexSet::from_list(6, {0, 2, 4});
  const OrientedGraph d = orient_away_from(p6, i);
  CHECK(min_forcing_number(d, 1).value == 3);
  for (int v : {0, 2, 4}) CHECK(d.in_degree(v) == 0);
}

TEST_CASE("tree cover of P6 rooted at an end gives a directed path") {
  const Graph p6 = path_graph(6);
  CoverPart part;
  part.vertices = {0, 1, 2, 3, 4, 5};
  part.root = 0;
  for (int i = 0; i < 5; ++i) part.edges.push_back({i, i + 1});
  const auto t = tree_cover_orientation(p6, {part}, 1);
  CHECK(t.roots == VertexSet::from_list(6, {0}));
  CHECK(t.orientation == forward_orientation(p6));
  CHECK(is_forcing_set(t.orientation, t.roots, 1));
  CHECK(t.level == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("optimal tree covers orient into forcing roots") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = gnp_graph(n, 0.45, rng());
    for (int k = 1; k <= 3; ++k) {
      const auto cover = tree_cover_number(g, k);
      const auto t = tree_cover_orientation(g, cover.cover, k);
      CHECK(t.roots.count() == cover.value);
      CHECK(is_forcing_set(t.orientation, t.roots, k));
    }
  }
}

TEST_CASE("a root with too many tree neighbours is refused") {
  CoverPart part;
  part.vertices = {0, 1, 2};
  part.root = 0;
  part.edges = {{0, 1}, {0, 2}};
  CHECK_THROWS(tree_cover_orientation(star_graph(2), {part}, 1));
}

TEST_CASE("reaching sets") {
  // alternating P4: 0->1 <-2 ->3
  const OrientedGraph p4 = alternating_orientation(path_graph(4));
  const auto r = min_reaching_set(p4);
  CHECK(r.root_list == std::vector<int>{0, 2});
  CHECK_FALSE(is_reachable(p4));
  CHECK(is_reachable(forward_orientation(path_graph(4))));
  CHECK_FALSE(is_strongly_reachable(forward_orientation(path_graph(4))));
  const OrientedGraph c5 = OrientedGraph::from_arcs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(is_strongly_reachable(c5));
  CHECK(min_reaching_set(c5).root_list == std::vector<int>{0});
}

TEST_CASE("bridges") {
  CHECK(bridges(path_graph(4)).size() == 3);
  CHECK(bridges(cycle_graph(5)).empty());
  CHECK(is_two_edge_connected(cycle_graph(5)));
  CHECK_FALSE(is_two_edge_connected(path_graph(3)));
  // two triangles joined by one edge
  const Graph bowtie = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  const auto b = bridges(bowtie);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == Edge{2, 3});
}
