#include <doctest.h>

#include <random>

#include "okforce/bounds.hpp"
#include "okforce/constructions.hpp"
#include "okforce/errors.hpp"
#include "okforce/forcing.hpp"
#include "okforce/generators.hpp"
#include "okforce/invariants.hpp"
#include "okforce/solver.hpp"
#include "oracles.hpp"

using namespace okf;

namespace {

const BoundEntry& entry(const BoundReport& r, const std::string& name) {
  for (const auto& e : r) {
    if (e.name == name) return e;
  }
  FAIL("missing entry " << name);
  return r.front();
}

}  // namespace

TEST_CASE("greedy on the complete out-tree family") {
  for (int delta = 1; delta <= 4; ++delta) {
    for (int r = 1; r <= 3; ++r) {
      const OrientedGraph t = greedy_tree(delta, r);
      long long power = 1;
      for (int i = 0; i < r; ++i) power *= delta;
      for (int k = 1; k <= delta; ++k) {
        const auto c = greedy_forcing_set(t, k);
        const long long expect = delta == 1 ? 1 : 1 + (delta - k) * (power - 1) / (delta - 1);
        CHECK(c.set.count() == expect);
        CHECK(c.bound == Rational(expect));
      }
    }
  }
  const auto c = greedy_forcing_set(greedy_tree(3, 2), 1);
  CHECK(c.set.count() == 9);
  CHECK(c.bound_name == "reachable");
}

TEST_CASE("greedy sets force and respect their bound") {
  std::mt19937_64 rng(4);
  int ran = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = gnp_graph(n, 0.5, rng());
    const OrientedGraph d = random_orientation(g, rng());
    const int k = 1 + static_cast<int>(rng() % 2);
    if (k > d.max_out_degree()) {
      CHECK_THROWS_AS(greedy_forcing_set(d, k), Inapplicable);
      continue;
    }
    const auto c = greedy_forcing_set(d, k);
    CHECK(oracle::closure(d, static_cast<oracle::Mask>(c.set.mask()), k) == oracle::full(n));
    CHECK(Rational(c.set.count()) <= c.bound);
    CHECK(c.set.count() >= oracle::forcing_number(d, k));
    if (is_strongly_reachable(d)) {
      GreedyOptions o;
      o.policy = RootPolicy::MinOutDegree;
      const auto s = greedy_forcing_set(d, k, o);
      CHECK(Rational(s.set.count()) <= s.bound);
      CHECK(is_forcing_set(d, s.set, k));
    }
    ++ran;
  }
  CHECK(ran > 100);
}

TEST_CASE("lower-bound report examples") {
  const OrientedGraph star = forward_orientation(star_graph(4));
  const auto r = lower_bound_report(star, 1);
  CHECK(entry(r, "sources").value == Rational(1));
  CHECK(entry(r, "min_out_degree").value == Rational(1));
  CHECK(min_forcing_number(star, 1).value == 4);

  const auto c6 = lower_bound_report(balanced_orientation(cycle_graph(6)), 1);
  CHECK(entry(c6, "min_out_degree").value == Rational(1));

  const OrientedGraph p4 = alternating_orientation(path_graph(4));
  CHECK(entry(lower_bound_report(p4, 1), "sources").value == Rational(2));
  CHECK(oracle::forcing_number(p4, 1) == 2);
}

TEST_CASE("forcing bound reports bracket the exact value") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const OrientedGraph d = random_orientation(gnp_graph(n, 0.45, rng()), rng());
    const int k = 1 + static_cast<int>(rng() % 3);
    const Rational f(oracle::forcing_number(d, k));
    for (const auto& e : forcing_bound_report(d, k)) {
      if (!e.applicable) continue;
      if (e.side == "lower") CHECK_MESSAGE(e.value <= f, e.name);
      if (e.side == "upper") CHECK_MESSAGE(f <= e.value, e.name);
    }
  }
}

TEST_CASE("extremal report on complete bipartite graphs and P6") {
  for (auto [x, y] : {std::pair{1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
    const Graph g = complete_bipartite_graph(x, y);
    const int n = x + y;
    const auto r = extremal_bound_report(g, 1);
    CHECK(entry(r, "order_minus_one").value == Rational(n - 1));
    CHECK(oracle::orientation_extremes(g, 1).second == n - 1);
  }
  const auto p6 = extremal_bound_report(path_graph(6), 1);
  CHECK(entry(p6, "independence").value == Rational(3));
  CHECK(entry(p6, "independence").applicable);
}

TEST_CASE("extremal reports bracket mof and MOF") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Graph g = gnp_graph(n, 0.6, rng());
    for (int k = 1; k <= 2; ++k) {
      const auto [lo, hi] = oracle::orientation_extremes(g, k);
      for (const auto& e : extremal_bound_report(g, k)) {
        if (!e.applicable) continue;
        const bool small = e.target == "mof_k";
        const bool one = e.target == "MOF";
        if (one && k != 1) continue;
        const Rational v(small ? lo : hi);
        if (e.side == "lower") CHECK_MESSAGE(e.value <= v, e.name);
        if (e.side == "upper") CHECK_MESSAGE(v <= e.value, e.name);
      }
    }
  }
}

TEST_CASE("dense subgraph") {
  CHECK(dense_subgraph(complete_graph(4)).count() == 4);
  CHECK(dense_subgraph(path_graph(4)).count() == 4);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = gnp_graph(n, 0.4, rng());
    const VertexSet h = dense_subgraph(g);
    REQUIRE(h.count() > 0);
    const auto sub = induced_subgraph(g, h);
    // min degree of H at least m/n, i.e. half the average degree
    CHECK(static_cast<long long>(sub.graph.min_degree()) * n >= g.size());
  }
}
