#include <doctest.h>

#include <random>

#include "okforce/errors.hpp"
#include "okforce/forcing.hpp"
#include "okforce/generators.hpp"
#include "oracles.hpp"

using namespace okf;

TEST_CASE("D6 from {x1, v}") {
  const OrientedGraph d6 = gp_orientation(6);
  const VertexSet s = VertexSet::from_list(7, {0, 6});
  const auto first = step(d6, s, 1);
  REQUIRE(first.size() == 1);
  CHECK(first[0] == Force{0, 1});
  CHECK(is_forcing_set(d6, s, 1));
  CHECK_FALSE(is_forcing_set(d6, VertexSet::from_list(7, {0}), 1));
  const auto t = closure(d6, s, 1);
  CHECK(t.rounds.size() == 5);
  CHECK(t.final_set == VertexSet::full(7));
}

TEST_CASE("directed path forces from its source in n-1 rounds") {
  const OrientedGraph p6 = forward_orientation(path_graph(6));
  const auto t = closure(p6, VertexSet::from_list(6, {0}), 1);
  CHECK(t.rounds.size() == 5);
  CHECK(t.final_set.count() == 6);
  CHECK(trace_to_text(t).rfind("round 1: 0>1", 0) == 0);
}

TEST_CASE("out-star centre forces only when at most k leaves are white") {
  const OrientedGraph star = forward_orientation(star_graph(4));
  CHECK_FALSE(is_forcing_set(star, VertexSet::from_list(5, {0}), 3));
  CHECK(is_forcing_set(star, VertexSet::from_list(5, {0}), 4));
  CHECK(is_forcing_set(star, VertexSet::from_list(5, {0, 1}), 3));
  // simultaneous: both leaves of a 2-star forced in one round
  const auto t = closure(forward_orientation(star_graph(2)), VertexSet::from_list(3, {0}), 2);
  REQUIRE(t.rounds.size() == 1);
  CHECK(t.rounds[0].size() == 2);
}

TEST_CASE("round pairs use the smallest forcer") {
  // 0->2, 1->2: both colored, vertex 2 forced once, by 0.
  const OrientedGraph d = OrientedGraph::from_arcs(3, {{0, 2}, {1, 2}});
  const auto t = closure(d, VertexSet::from_list(3, {0, 1}), 1);
  REQUIRE(t.rounds.size() == 1);
  REQUIRE(t.rounds[0].size() == 1);
  CHECK(t.rounds[0][0] == Force{0, 2});
}

TEST_CASE("closure agrees with the reference rule and chain forests are valid") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = gnp_graph(n, 0.2 + 0.1 * static_cast<double>(rng() % 5), rng());
    const OrientedGraph d = random_orientation(g, rng());
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto mask = static_cast<oracle::Mask>(rng() & oracle::full(n)) | 1U;
    const VertexSet s = VertexSet::from_mask(n, mask);
    const VertexSet fin = closure_set(d, s, k);
    CHECK(fin.mask() == oracle::closure(d, mask, k));
    CHECK(closure(d, s, k).final_set == fin);
    if (fin.count() == n) {
      const auto forest = forcing_chains(d, s, k);
      CHECK(chain_forest_violations(d, forest, k).empty());
      CHECK(forest.component_count() == s.count());
      for (const auto& kids : forest.children()) CHECK(static_cast<int>(kids.size()) <= k);
    } else {
      CHECK_THROWS_AS(forcing_chains(d, s, k), PreconditionError);
    }
  }
}
