#include <doctest.h>

#include "okforce/enumerate.hpp"
#include "okforce/errors.hpp"
#include "okforce/generators.hpp"
#include "okforce/graph.hpp"
#include "oracles.hpp"

using namespace okf;

TEST_CASE("edges are kept in lexicographic order") {
  const Graph g = Graph::from_edges(4, {{3, 2}, {1, 0}, {0, 3}});
  REQUIRE(g.size() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 3});
  CHECK(g.edge(2) == Edge{2, 3});
  CHECK(g.edge_index(3, 0) == 1);
  CHECK_FALSE(g.edge_index(1, 2).has_value());
}

TEST_CASE("malformed edge lists are rejected") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), ParameterError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), ParameterError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), ParameterError);
  CHECK_THROWS_AS(OrientedGraph::from_arcs(2, {{0, 1}, {1, 0}}), ParameterError);
}

TEST_CASE("C4 bits 1110 decode against the sorted edge list") {
  const Graph c4 = cycle_graph(4);
  // (0,1) (0,3) (1,2) (2,3)
  const OrientedGraph d = orient(c4, std::string_view("1110"));
  CHECK(d.has_arc(0, 1));
  CHECK(d.has_arc(0, 3));
  CHECK(d.has_arc(1, 2));
  CHECK(d.has_arc(3, 2));
  CHECK(d.bit_string() == "1110");
  CHECK(d.bits() == 0b0111);
  CHECK(orient(c4, d.bits()) == d);
}

TEST_CASE("orientations preserve degrees and reversal flips every arc") {
  const Graph g = gnp_graph(9, 0.4, 7);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const OrientedGraph d = random_orientation(g, seed);
    const OrientedGraph r = reversal(d);
    for (int v = 0; v < g.order(); ++v) {
      CHECK(d.out_degree(v) + d.in_degree(v) == g.degree(v));
      CHECK(r.out_degree(v) == d.in_degree(v));
    }
    for (const auto& a : d.arcs()) CHECK(r.has_arc(a.head, a.tail));
    CHECK(reversal(r) == d);
  }
}

TEST_CASE("38 connected labeled graphs on 4 vertices") {
  int ours = 0;
  for_each_labeled_graph(4, true, [&](const Graph&) { ++ours; });
  int brute = 0;
  const int pairs = 6;
  for (int code = 0; code < (1 << pairs); ++code) {
    std::vector<std::pair<int, int>> edges;
    int i = 0;
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v, ++i) {
        if (code >> i & 1) edges.emplace_back(u, v);
      }
    }
    brute += oracle::connected(4, edges) ? 1 : 0;
  }
  CHECK(brute == 38);
  CHECK(ours == brute);
}

TEST_CASE("labeled tree counts follow n^(n-2)") {
  for (int n = 1; n <= 7; ++n) {
    long long count = 0;
    for_each_labeled_tree(n, [&](const Graph& t) {
      CHECK(t.size() == n - 1);
      CHECK(is_connected(t));
      ++count;
    });
    long long expect = 1;
    for (int i = 0; i < n - 2; ++i) expect *= n;
    CHECK(count == expect);
  }
}

TEST_CASE("orientation enumeration visits every bit vector once in order") {
  const Graph g = cycle_graph(5);
  std::uint64_t next = 0;
  for_each_orientation(g, [&](const OrientedGraph& d) { CHECK(d.bits() == next++); });
  CHECK(next == 32);
}

TEST_CASE("family generators") {
  const auto t = std::get<OrientedGraph>(generate({Family::GreedyTree, {3, 2}, 0.5, 0}));
  CHECK(t.order() == 13);
  int internal = 0;
  for (int v = 0; v < t.order(); ++v) {
    CHECK((t.out_degree(v) == 3 || t.out_degree(v) == 0));
    internal += t.out_degree(v) == 3 ? 1 : 0;
  }
  CHECK(internal == 4);

  CHECK(path_graph(1).size() == 0);
  CHECK(star_graph(5).order() == 6);
  CHECK(complete_bipartite_graph(2, 3).size() == 6);

  const OrientedGraph d6 = gp_orientation(6);
  CHECK(d6.order() == 7);
  for (int i = 0; i + 1 < 6; ++i) CHECK(d6.has_arc(i, i + 1));
  for (int x : {1, 3, 5}) CHECK(d6.has_arc(x, 6));
  CHECK(d6.out_degree(6) == 0);

  CHECK(gnp_graph(8, 0.3, 5) == gnp_graph(8, 0.3, 5));
  CHECK_THROWS_AS(family_from_name("petersen"), ParameterError);
}

TEST_CASE("induced subgraphs of D6") {
  const OrientedGraph d6 = gp_orientation(6);
  const auto path = induced_subgraph(d6, VertexSet::from_list(7, {0, 1, 2, 3, 4, 5}));
  CHECK(path.graph.size() == 5);
  const auto star = induced_subgraph(d6, VertexSet::from_list(7, {1, 3, 5, 6}));
  CHECK(star.graph.size() == 3);
  CHECK(star.graph.in_degree(3) == 3);
  CHECK(star.original == std::vector<int>{1, 3, 5, 6});
}
