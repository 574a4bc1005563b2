#include <doctest.h>

#include <random>

#include "okforce/errors.hpp"
#include "okforce/forcing.hpp"
#include "okforce/generators.hpp"
#include "okforce/invariants.hpp"
#include "okforce/solver.hpp"
#include "oracles.hpp"

using namespace okf;

TEST_CASE("out-star on 5 vertices") {
  const OrientedGraph star = forward_orientation(star_graph(4));
  CHECK(min_forcing_number(star, 2).value == 3);
  CHECK(min_forcing_number(star, 1).value == 4);
  CHECK(oracle::forcing_number(star, 2) == 3);
  // reversed: every leaf is a source
  CHECK(min_forcing_number(reversal(star), 2).value == 4);
}

TEST_CASE("greedy tree (3,2) at k=1 needs 9") {
  const OrientedGraph t = greedy_tree(3, 2);
  const auto r = min_forcing_number(t, 1);
  CHECK(r.value == 9);
  CHECK(is_forcing_set(t, r.witness, 1));
}

TEST_CASE("D6 has forcing number 2") {
  const OrientedGraph d6 = gp_orientation(6);
  const auto r = min_forcing_number(d6, 1);
  CHECK(r.value == oracle::forcing_number(d6, 1));
  CHECK(r.value == 2);
  CHECK(r.witness == VertexSet::from_list(7, {0, 2}));
  CHECK(is_forcing_set(d6, VertexSet::from_list(7, {0, 6}), 1));
}

TEST_CASE("exact solver matches subset enumeration") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = gnp_graph(n, 0.45, rng());
    const OrientedGraph d = random_orientation(g, rng());
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto r = min_forcing_number(d, k);
    CHECK(r.value == oracle::forcing_number(d, k));
    CHECK(r.witness.count() == r.value);
    CHECK(is_forcing_set(d, r.witness, k));
    CHECK(forcing_number_brute(d, k).value == r.value);
  }
}

TEST_CASE("path extremes") {
  for (int n = 2; n <= 10; ++n) {
    const Graph p = path_graph(n);
    CHECK(min_oriented_forcing_number(p, 1).value == 1);
    CHECK(max_oriented_forcing_number(p, 1).value == (n + 1) / 2);
  }
  const auto mx = max_oriented_forcing_number(path_graph(6), 1);
  CHECK(min_forcing_number(mx.orientation, 1).value == 3);
}

TEST_CASE("star K_{1,6} at k=3") { CHECK(min_oriented_forcing_number(star_graph(6), 3).value == 3); }

TEST_CASE("orientation extremes match direct enumeration") {
  const Graph c4 = cycle_graph(4);
  const auto [lo, hi] = oracle::orientation_extremes(c4, 1);
  CHECK(max_oriented_forcing_number(c4, 1).value == hi);
  CHECK(min_oriented_forcing_number(c4, 1).value == lo);
  CHECK(hi >= oracle::independence_number(c4));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Graph g = gnp_graph(n, 0.5, rng());
    for (int k = 1; k <= 2; ++k) {
      const auto [l, h] = oracle::orientation_extremes(g, k);
      ExtremeOptions plain;
      plain.tree_cover_exit = false;
      plain.reversal_dedup = false;
      CHECK(min_oriented_forcing_number(g, k).value == l);
      CHECK(max_oriented_forcing_number(g, k).value == h);
      CHECK(min_oriented_forcing_number(g, k, plain).value == l);
      CHECK(max_oriented_forcing_number(g, k, plain).value == h);
    }
  }
}

TEST_CASE("threads do not change results") {
  const Graph g = gnp_graph(7, 0.5, 21);
  ExtremeOptions one;
  ExtremeOptions four;
  four.threads = 4;
  const auto a = max_oriented_forcing_number(g, 1, one);
  const auto b = max_oriented_forcing_number(g, 1, four);
  CHECK(a.value == b.value);
  CHECK(a.orientation == b.orientation);
}

TEST_CASE("limits are refused") {
  CHECK_THROWS_AS(min_forcing_number(forward_orientation(path_graph(25)), 1), LimitError);
  CHECK_THROWS_AS(max_oriented_forcing_number(complete_graph(8), 1), LimitError);
}
