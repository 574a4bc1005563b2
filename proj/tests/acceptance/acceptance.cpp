// Exit gate: one PASS/FAIL line per acceptance criterion, each with a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "okforce/bounds.hpp"
#include "okforce/checks.hpp"
#include "okforce/constructions.hpp"
#include "okforce/enumerate.hpp"
#include "okforce/forcing.hpp"
#include "okforce/generators.hpp"
#include "okforce/invariants.hpp"
#include "okforce/solver.hpp"

using namespace okf;

namespace {

struct Outcome {
  bool ok = true;
  long long cases = 0;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

// Orientations met by criteria 1-5, replayed through the greedy in criterion 6.
struct Encountered {
  OrientedGraph d;
  int k = 1;
};
std::vector<Encountered> encountered;

void remember(const OrientedGraph& d, int k) { encountered.push_back({d, k}); }

ExtremeOptions exhaustive() {
  ExtremeOptions o;
  o.tree_cover_exit = false;
  return o;
}

Outcome paths() {
  Outcome out;
  for (int n = 2; n <= 10; ++n) {
    const Graph p = path_graph(n);
    const auto lo = min_oriented_forcing_number(p, 1, exhaustive());
    const auto hi = max_oriented_forcing_number(p, 1, exhaustive());
    if (lo.value != 1) out.fail("mof(P_" + std::to_string(n) + ") = " + std::to_string(lo.value));
    if (hi.value != (n + 1) / 2) out.fail("MOF(P_" + std::to_string(n) + ") = " + std::to_string(hi.value));
    for_each_orientation(p, [&](const OrientedGraph& d) { remember(d, 1); });
    ++out.cases;
  }
  return out;
}

Outcome trees() {
  Outcome out;
  for (int n = 1; n <= 9; ++n) {
    for_each_labeled_tree(n, [&](const Graph& t) {
      const auto hi = max_oriented_forcing_number(t, 1);
      const auto a = independence_number(t).value;
      if (hi.value != a) out.fail("tree " + std::to_string(labeled_code(t)) + " on " + std::to_string(n));
      if (n <= 7) remember(hi.orientation, 1);
      ++out.cases;
    });
  }
  return out;
}

// Criteria 3 and 4 share one enumeration of connected labeled graphs.
struct GraphSweep {
  Outcome mof;
  Outcome independence;
};

GraphSweep connected_graphs() {
  GraphSweep s;
  for (int n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, true, [&](const Graph& g) {
      const std::string tag = "n=" + std::to_string(n) + " code=" + std::to_string(labeled_code(g));
      const long long rho = path_cover_number(g).value;
      for (int k = 1; k <= 2; ++k) {
        const auto lo = min_oriented_forcing_number(g, k, exhaustive());
        if (lo.value != tree_cover_number(g, k).value) s.mof.fail("mof_" + std::to_string(k) + " " + tag);
        if (k == 1 && lo.value != rho) s.mof.fail("rho " + tag);
      }
      ++s.mof.cases;

      const long long alpha = independence_number(g).value;
      const int delta = g.max_degree();
      std::vector<int> ks{1, 2};
      if (delta > 2) ks.push_back(delta);
      for (int k : ks) {
        const auto hi = max_oriented_forcing_number(g, k);
        if (hi.value < alpha) s.independence.fail("MOF_" + std::to_string(k) + " < alpha " + tag);
        if (k >= delta && hi.value != alpha) s.independence.fail("MOF_Delta != alpha " + tag);
        if (n <= 5 && g.size() > 0) remember(hi.orientation, k);
      }
      if (delta == 0 && max_oriented_forcing_number(g, 1).value != alpha) s.independence.fail("edgeless " + tag);
      ++s.independence.cases;
    });
  }
  return s;
}

Outcome reversal_invariance() {
  Outcome out;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const double p = 0.15 + 0.05 * static_cast<double>(rng() % 10);
    const OrientedGraph d = random_orientation(gnp_graph(n, p, rng()), rng());
    const int a = min_forcing_number(d, 1).value;
    const int b = min_forcing_number(reversal(d), 1).value;
    if (a != b) out.fail("case " + std::to_string(i) + ": " + std::to_string(a) + " vs " + std::to_string(b));
    remember(d, 1);
    ++out.cases;
  }
  for (int n = 3; n <= 8; ++n) {
    const OrientedGraph out_star = forward_orientation(star_graph(n - 1));
    for (int k = 2; k < n; ++k) {
      const int f = min_forcing_number(out_star, k).value;
      const int r = min_forcing_number(reversal(out_star), k).value;
      if (f != n - k || r != n - 1) {
        out.fail("star n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(f) + ", " +
                 std::to_string(r));
      }
      remember(out_star, k);
      ++out.cases;
    }
  }
  return out;
}

Outcome greedy() {
  Outcome out;
  for (const auto& [d, k] : encountered) {
    if (!is_reachable(d) || d.size() == 0 || k > d.max_out_degree()) continue;
    const auto c = greedy_forcing_set(d, k);
    const int delta = d.max_out_degree();
    const Rational bound(static_cast<std::int64_t>(delta - k) * d.order() + k, delta);
    if (!is_forcing_set(d, c.set, k)) out.fail("greedy set does not force: " + d.bit_string());
    if (Rational(c.set.count()) > bound) out.fail("greedy exceeds bound: " + d.bit_string());
    ++out.cases;
  }
  for (int delta = 1; delta <= 4; ++delta) {
    for (int r = 1; r <= 3; ++r) {
      const OrientedGraph t = greedy_tree(delta, r);
      long long power = 1;
      for (int i = 0; i < r; ++i) power *= delta;
      for (int k = 1; k <= delta; ++k) {
        const long long expect = delta == 1 ? 1 : 1 + (delta - k) * (power - 1) / (delta - 1);
        const auto c = greedy_forcing_set(t, k);
        if (c.set.count() != expect || !is_forcing_set(t, c.set, k)) {
          out.fail("greedy_tree(" + std::to_string(delta) + "," + std::to_string(r) + ") k=" + std::to_string(k));
        }
        ++out.cases;
      }
    }
  }
  return out;
}

Outcome stars() {
  Outcome out;
  for (int n = 3; n <= 10; ++n) {
    for (int k = 1; k < n - 1; ++k) {
      const int v = min_oriented_forcing_number(star_graph(n - 1), k, exhaustive()).value;
      if (v != n - k - 1) out.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(v));
      ++out.cases;
    }
  }
  return out;
}

Outcome suite() {
  Outcome out;
  SuiteOptions o;
  o.nmax = 6;
  for (const auto& r : run_suite({}, o)) {
    out.cases += r.instances;
    if (r.violation_count != 0) out.fail(r.id + " has " + std::to_string(r.violation_count) + " violations");
    if (r.needs_exhibit && r.exhibits.empty()) out.fail(r.id + " produced no exhibit");
  }
  // The non-monotonicity triple at p = 6: induced path, D_6, induced in-star.
  const OrientedGraph d6 = gp_orientation(6);
  const auto h = induced_subgraph(d6, VertexSet::from_list(7, {0, 1, 2, 3, 4, 5}));
  const auto k = induced_subgraph(d6, VertexSet::from_list(7, {1, 3, 5, 6}));
  const int fh = min_forcing_number(h.graph, 1).value;
  const int fd = min_forcing_number(d6, 1).value;
  const int fk = min_forcing_number(k.graph, 1).value;
  if (fh != 1 || fd != 2 || fk != 3) {
    out.fail("triple " + std::to_string(fh) + " " + std::to_string(fd) + " " + std::to_string(fk));
  }
  return out;
}

Outcome engine_properties() {
  Outcome out;
  std::mt19937_64 rng(99);
  auto sources = [](const OrientedGraph& d) {
    VertexSet s(d.order());
    for (int v = 0; v < d.order(); ++v) {
      if (d.in_degree(v) == 0) s.insert(v);
    }
    return s;
  };
  while (out.cases < 12000) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const OrientedGraph d = random_orientation(gnp_graph(n, 0.1 + 0.05 * static_cast<double>(rng() % 10), rng()), rng());
    const int k = 1 + static_cast<int>(rng() % 3);
    const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    const VertexSet s = VertexSet::from_mask(n, (rng() & rng() & all) | 1U);
    const VertexSet t = s | VertexSet::from_mask(n, rng() & all);
    const VertexSet cs = closure_set(d, s, k);
    if (!cs.is_subset_of(closure_set(d, t, k))) out.fail("monotonicity");
    if (closure_set(d, cs, k) != cs) out.fail("idempotence");
    if (cs.count() == n) {
      const auto f = forcing_chains(d, s, k);
      if (f.component_count() != s.count()) out.fail("chain count");
      for (const auto& kids : f.children()) {
        if (static_cast<int>(kids.size()) > k) out.fail("children");
      }
      if (!sources(d).is_subset_of(s)) out.fail("forcing set misses a source");
    }
    ++out.cases;
  }
  // Additivity over weakly connected components, against plain subset search.
  for (int i = 0; i < 400; ++i) {
    const int a = 1 + static_cast<int>(rng() % 5);
    const int b = 1 + static_cast<int>(rng() % 5);
    const OrientedGraph x = random_orientation(gnp_graph(a, 0.5, rng()), rng());
    const OrientedGraph y = random_orientation(gnp_graph(b, 0.5, rng()), rng());
    std::vector<Arc> arcs = x.arcs();
    for (const auto& e : y.arcs()) arcs.push_back({e.tail + a, e.head + a});
    const OrientedGraph u = OrientedGraph::from_arcs(a + b, arcs);
    const int k = 1 + static_cast<int>(rng() % 2);
    const int whole = oracle::forcing_number(u, k);
    if (whole != oracle::forcing_number(x, k) + oracle::forcing_number(y, k)) out.fail("additivity (oracle)");
    if (min_forcing_number(u, k).value != whole) out.fail("additivity (solver)");
    ++out.cases;
  }
  return out;
}

int failures = 0;

void report(int id, const std::string& title, double limit_s, const std::function<Outcome()>& run) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_s) o.fail("over time limit");
  if (!o.ok) ++failures;
  std::printf("[%s] %d. %s  cases=%lld  time=%.1fs (limit %.0fs)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(),
              o.cases, secs, limit_s, o.ok ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  report(1, "paths: mof = 1, MOF = ceil(n/2), 2 <= n <= 10", 5, paths);
  report(2, "trees: MOF = alpha, labeled n <= 9", 120, trees);
  GraphSweep sweep;
  report(3, "connected n <= 6: mof_k = T_k (k = 1, 2), mof = rho", 600, [&] {
    sweep = connected_graphs();
    return sweep.mof;
  });
  report(4, "connected n <= 6: MOF_k >= alpha (k = 1, 2, Delta), equal at Delta", 600,
         [&] { return sweep.independence; });
  report(5, "reversal: F(D) = F(D') on 1000 random; out-star n-k vs n-1", 60, reversal_invariance);
  report(6, "greedy certificates on reachable orientations and greedy trees", 60, greedy);
  report(7, "stars: mof_k(K_{1,n-1}) = n-k-1, 3 <= n <= 10", 60, stars);
  report(8, "full check suite at nmax 6 with exhibits", 900, suite);
  report(9, "engine properties, >= 10^4 seeded cases", 60, engine_properties);
  std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed" : "acceptance: FAILED");
  return failures == 0 ? 0 : 1;
}
