#include <doctest.h>

#include <random>

#include "okforce/generators.hpp"
#include "okforce/invariants.hpp"
#include "oracles.hpp"

using namespace okf;

TEST_CASE("small named values") {
  CHECK(independence_number(path_graph(6)).value == 3);
  CHECK(independence_number(path_graph(6)).witness == VertexSet::from_list(6, {0, 2, 4}));
  CHECK(oracle::independence_number(path_graph(6)) == 3);
  CHECK(clique_number(cycle_graph(5)).value == 2);
  CHECK(clique_number(complete_graph(5)).value == 5);
  CHECK(path_cover_number(path_graph(6)).value == 1);
  CHECK(path_cover_number(star_graph(5)).value == 4);
  CHECK(tree_cover_number(star_graph(5), 4).value == 1);
  CHECK(matching_number(complete_bipartite_graph(2, 4)).value == 2);
  CHECK(induced_matching_number(path_graph(6)).value == 2);
  CHECK(diameter(path_graph(6)) == 5);
  CHECK_FALSE(diameter(Graph(2, {})).has_value());
}

TEST_CASE("in-star K_{1,q} needs q blocks") {
  for (int q = 1; q <= 6; ++q) {
    const OrientedGraph in_star = reversal(forward_orientation(star_graph(q)));
    for (int k = 1; k <= 3; ++k) {
      CHECK(induced_kary_cover_number(in_star, k).value == q);
      CHECK(oracle::branching_cover(in_star, k) == q);
    }
  }
}

TEST_CASE("invariants agree with brute force") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = gnp_graph(n, 0.25 + 0.1 * static_cast<double>(rng() % 5), rng());
    if (g.size() > 14) continue;
    CHECK(independence_number(g).value == oracle::independence_number(g));
    CHECK(clique_number(g).value == oracle::clique_number(g));
    CHECK(matching_number(g).value == oracle::matching(g, false));
    CHECK(induced_matching_number(g).value == oracle::matching(g, true));
    CHECK(path_cover_number(g).value == oracle::bounded_forest_cover(g, 2));
    for (int k = 1; k <= 3; ++k) {
      const auto t = tree_cover_number(g, k);
      CHECK(t.value == oracle::bounded_forest_cover(g, k + 1));
      CHECK(tree_cover_violations(g, t.cover, k + 1).empty());
    }
    const OrientedGraph d = random_orientation(g, rng());
    for (int k = 1; k <= 2; ++k) CHECK(induced_kary_cover_number(d, k).value == oracle::branching_cover(d, k));
  }
}
