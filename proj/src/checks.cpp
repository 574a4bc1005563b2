#include "okforce/checks.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <random>
#include <thread>

#include "okforce/bounds.hpp"
#include "okforce/constructions.hpp"
#include "okforce/enumerate.hpp"
#include "okforce/errors.hpp"
#include "okforce/forcing.hpp"
#include "okforce/generators.hpp"
#include "okforce/invariants.hpp"
#include "okforce/serialize.hpp"
#include "okforce/solver.hpp"

namespace okf {

namespace {

constexpr int kGraphLimit = 6;
constexpr int kTreeLimit = 9;

std::string describe(const Graph& g) { return to_json(g).dump(); }
std::string describe(const OrientedGraph& d) { return to_json(d).dump(); }

std::string describe(const Graph& g, int k) {
  json j = to_json(g);
  j["k"] = k;
  return j.dump();
}

std::string describe(const OrientedGraph& d, int k) {
  json j = to_json(d);
  j["k"] = k;
  return j.dump();
}

struct Outcome {
  std::vector<Finding> violations;
  std::vector<Finding> exhibits;
  bool skipped = false;

  void fail(std::string instance, std::string observed) {
    violations.push_back({std::move(instance), std::move(observed)});
  }
};

// Runs f over every item on a small thread pool; outcomes merge in item order.
template <class T, class F>
void pool(const std::vector<T>& items, const SuiteOptions& options, CheckResult& result, F&& f) {
  std::vector<Outcome> out(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        f(items[i], out[i]);
      } catch (const std::exception& e) {
        out[i].fail(describe(items[i]), std::string("error: ") + e.what());
      }
    }
  };
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(items.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> team;
    for (int t = 0; t < threads; ++t) team.emplace_back(worker);
    for (auto& th : team) th.join();
  }
  for (auto& o : out) {
    if (o.skipped) {
      ++result.skipped;
    } else {
      ++result.instances;
    }
    result.violation_count += static_cast<long long>(o.violations.size());
    for (auto& v : o.violations) {
      if (result.violations.size() < options.max_recorded) result.violations.push_back(std::move(v));
    }
    for (auto& e : o.exhibits) result.exhibits.push_back(std::move(e));
  }
}

std::vector<OrientedGraph> random_orientations(const SuiteOptions& o) {
  std::vector<OrientedGraph> out;
  if (o.random_nmax < 6) return out;
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < o.random_cases; ++i) {
    const int n = 6 + static_cast<int>(rng() % static_cast<std::uint64_t>(o.random_nmax - 5));
    const double p = 0.2 + 0.1 * static_cast<double>(rng() % 5);
    const Graph g = gnp_graph(n, p, rng());
    out.push_back(random_orientation(g, rng()));
  }
  return out;
}

std::vector<OrientedGraph> oriented_universe(const SuiteOptions& o) {
  std::vector<OrientedGraph> out;
  const int top = std::min(o.nmax, o.orientation_nmax);
  for (int n = 1; n <= top; ++n) {
    for_each_labeled_graph(n, false, [&](const Graph& g) {
      for_each_orientation(g, [&](const OrientedGraph& d) { out.push_back(d); });
    });
  }
  auto extra = random_orientations(o);
  out.insert(out.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
  return out;
}

std::vector<Graph> graph_universe(const SuiteOptions& o) {
  std::vector<Graph> out;
  for (int n = 1; n <= o.nmax; ++n) {
    for_each_labeled_graph(n, false, [&](const Graph& g) { out.push_back(g); });
  }
  return out;
}

int tree_nmax(const SuiteOptions& o) { return o.tree_nmax > 0 ? o.tree_nmax : std::min(kTreeLimit, o.nmax + 2); }

std::vector<Graph> tree_universe(const SuiteOptions& o) {
  std::vector<Graph> out;
  for (int n = 1; n <= tree_nmax(o); ++n) {
    for_each_labeled_tree(n, [&](const Graph& g) { out.push_back(g); });
  }
  return out;
}

int fk(const OrientedGraph& d, int k) { return min_forcing_number(d, k).value; }

std::string pair_text(long long a, long long b) { return std::to_string(a) + " vs " + std::to_string(b); }

std::string universe_oriented(const SuiteOptions& o) {
  return "every oriented graph on n <= " + std::to_string(std::min(o.nmax, o.orientation_nmax)) + " plus " +
         std::to_string(o.random_cases) + " seeded random orientations on 6.." + std::to_string(o.random_nmax) +
         " vertices (seed " + std::to_string(o.seed) + ")";
}

std::string universe_graphs(const SuiteOptions& o) { return "every labeled graph on n <= " + std::to_string(o.nmax); }

std::string universe_trees(const SuiteOptions& o) { return "every labeled tree on n <= " + std::to_string(tree_nmax(o)); }

// ---------------------------------------------------------------- F_k(D) checks

void check_c1(const SuiteOptions& o, GraphTable&, CheckResult& r) {
  pool(oriented_universe(o), o, r, [](const OrientedGraph& d, Outcome& out) {
    const int top = d.max_out_degree() + 1;
    int prev = -1;
    for (int k = 1; k <= top; ++k) {
      const auto res = min_forcing_number(d, k);
      if (prev >= 0 && res.value > prev) out.fail(describe(d, k), "F_k rose: " + pair_text(prev, res.value));
      prev = res.value;
      // Supersets of forcing sets force.
      for (int v = 0; v < d.order(); ++v) {
        if (res.witness.contains(v)) continue;
        VertexSet bigger = res.witness;
        bigger.insert(v);
        if (!is_forcing_set(d, bigger, k)) out.fail(describe(d, k), "superset " + bigger.to_string() + " not forcing");
        break;
      }
    }
  });
}

void check_c2(const SuiteOptions& o, GraphTable&, CheckResult& r) {
  pool(oriented_universe(o), o, r, [](const OrientedGraph& d, Outcome& out) {
    if (!is_reachable(d)) {
      out.skipped = true;
      return;
    }
    const int dmax = d.max_out_degree();
    for (int k = std::max(1, dmax); k <= dmax + 1; ++k) {
      const int v = fk(d, k);
      if (v != 1) out.fail(describe(d, k), "F_k = " + std::to_string(v));
    }
  });
}

void check_c3(const SuiteOptions& o, GraphTable&, CheckResult& r) {
  pool(oriented_universe(o), o, r, [](const OrientedGraph& d, Outcome& out) {
    VertexSet sources(d.order());
    for (int v = 0; v < d.order(); ++v) {
      if (d.in_degree(v) == 0) sources.insert(v);
    }
    for (int k = 1; k <= d.max_out_degree() + 1; ++k) {
      const auto res = min_forcing_number(d, k);
      const int bound = std::max(d.min_out_degree() - k + 1, 1);
      if (res.value < bound) out.fail(describe(d, k), "F_k < max{delta+ - k + 1, 1}: " + pair_text(res.value, bound));
      if (!sources.is_subset_of(res.witness)) out.fail(describe(d, k), "witness misses an in-degree-0 vertex");
    }
  });
}

void check_c4(const SuiteOptions& o, GraphTable&, CheckResult& r) {
  pool(oriented_universe(o), o, r, [](const OrientedGraph& d, Outcome& out) {
    for (int k = 1; k <= std::max(1, d.max_out_degree()); ++k) {
      const auto res = min_forcing_number(d, k);
      std::vector<VertexSet> sets{res.witness, VertexSet::full(d.order())};
      for (int v = 0; v < d.order(); ++v) {
        if (!res.witness.contains(v)) {
          VertexSet s = res.witness;
          s.insert(v);
          sets.push_back(s);
          break;
        }
      }
      for (const auto& s : sets) {
        const ChainForest f = forcing_chains(d, s, k);
        for (const auto& msg : chain_forest_violations(d, f, k)) out.fail(describe(d, k), s.to_string() + ": " + msg);
        if (f.component_count() != s.count()) {
          out.fail(describe(d, k), "components vs |S|: " + pair_text(f.component_count(), s.count()));
        }
      }
    }
  });
}

void check_c5(const SuiteOptions& o, GraphTable&, CheckResult& r) {
  pool(oriented_universe(o), o, r, [](const OrientedGraph& d, Outcome& out) {
    for (int k = 1; k <= std::max(1, d.max_out_degree()); ++k) {
      const int f = fk(d, k);
      const auto it = induced_kary_cover_number(d, k).value;
      if (it > f) out.fail(describe(d, k), "IT_k > F_k: " + pair_text(it, f));
    }
  });
}

void check_c6(const SuiteOptions& o, GraphTable&, CheckResult& r) {
  pool(oriented_universe(o), o, r, [](const OrientedGraph& d, Outcome& out) {
    const int a = fk(d, 1);
    const int b = fk(reversal(d), 1);
    if (a != b) out.fail(describe(d, 1), "F(D) vs F(D'): " + pair_text(a, b));
  });
  // Out-stars for k >= 2: F_k = n - k but the reversal needs n - 1.
  std::vector<std::pair<int, int>> stars;
  for (int n = 3; n <= 8; ++n) {
    for (int k = 2; k < n; ++k) stars.emplace_back(n, k);
  }
  for (const auto& [n, k] : stars) {
    ++r.instances;
    const OrientedGraph out_star = forward_orientation(star_graph(n - 1));
    const int a = fk(out_star, k);
    const int b = fk(reversal(out_star), k);
    if (a == n - k && b == n - 1) {
      r.exhibits.push_back({describe(out_star, k), "F_k(D) = " + std::to_string(a) + ", F_k(D') = " + std::to_string(b)});
    } else {
      ++r.violation_count;
      r.violations.push_back({describe(out_star, k), "expected (n-k, n-1), got " + pair_text(a, b)});
    }
  }
}

void check_c7(const SuiteOptions& o, GraphTable&, CheckResult& r) {
  pool(oriented_universe(o), o, r, [](const OrientedGraph& d, Outcome& out) {
    const int n = d.order();
    const int dmax = d.max_out_degree();
    if (dmax == 0) {
      out.skipped = true;
      return;
    }
    const auto rs = min_reaching_set(d);
    const auto rr = static_cast<std::int64_t>(rs.root_list.size());
    const auto alpha = independence_number(d.underlying()).value;
    if (rr > alpha) out.fail(describe(d), "reaching set larger than alpha: " + pair_text(rr, alpha));
    const bool strong = is_strongly_reachable(d);
    for (int k = 1; k <= dmax; ++k) {
      const int f = fk(d, k);
      const auto cert = greedy_forcing_set(d, k);
      const auto size = cert.set.count();
      if (!is_forcing_set(d, cert.set, k)) out.fail(describe(d, k), "greedy set does not force");
      if (size < f) out.fail(describe(d, k), "greedy below F_k: " + pair_text(size, f));
      const Rational reach_bound(static_cast<std::int64_t>(dmax - k) * n + rr * k, dmax);
      if (Rational(size) > reach_bound) {
        out.fail(describe(d, k), "greedy " + std::to_string(size) + " > " + reach_bound.to_string());
      }
      if (Rational(size) > cert.bound) out.fail(describe(d, k), "greedy exceeds its certificate bound");
      const Rational alpha_bound(static_cast<std::int64_t>(dmax - 1) * n + alpha * k, dmax);
      if (Rational(f) > alpha_bound) out.fail(describe(d, k), "F_k above the alpha form " + alpha_bound.to_string());
      if (strong) {
        const auto sc = greedy_forcing_set(d, k, {RootPolicy::MinOutDegree, 0});
        if (Rational(sc.set.count()) > sc.bound) {
          out.fail(describe(d, k), "strongly reachable greedy " + std::to_string(sc.set.count()) + " > " +
                                       sc.bound.to_string());
        }
      }
    }
  });
  // Complete out-trees: the greedy set has exactly 1 + (D - k)(D^r - 1)/(D - 1) vertices.
  for (int dplus = 1; dplus <= 4; ++dplus) {
    for (int layers = 1; layers <= 3; ++layers) {
      const OrientedGraph t = greedy_tree(dplus, layers);
      long long power = 1;
      for (int i = 0; i < layers; ++i) power *= dplus;
      for (int k = 1; k <= dplus; ++k) {
        const long long expected = dplus == 1 ? 1 : 1 + (dplus - k) * (power - 1) / (dplus - 1);
        const auto cert = greedy_forcing_set(t, k, {RootPolicy::Vertex, 0});
        ++r.instances;
        if (cert.set.count() != expected) {
          ++r.violation_count;
          r.violations.push_back({describe(t, k), "greedy tree size " + pair_text(cert.set.count(), expected)});
        }
      }
    }
  }
}

void check_c8(const SuiteOptions& o, GraphTable&, CheckResult& r) {
  auto items = oriented_universe(o);
  // Disjoint unions of random pieces, so larger disconnected instances are covered too.
  const auto pieces = random_orientations(o);
  for (std::size_t i = 0; i + 1 < pieces.size() && i < 100; i += 2) {
    if (pieces[i].order() + pieces[i + 1].order() > 12) continue;
    const Graph u = disjoint_union(pieces[i].underlying(), pieces[i + 1].underlying());
    std::vector<bool> dir = pieces[i].direction();
    dir.insert(dir.end(), pieces[i + 1].direction().begin(), pieces[i + 1].direction().end());
    items.push_back(orient(u, dir));
  }
  pool(items, o, r, [](const OrientedGraph& d, Outcome& out) {
    const auto comp = connected_components(d.underlying());
    const int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    for (int k = 1; k <= 2; ++k) {
      const int whole = forcing_number_brute(d, k).value;
      int sum = 0;
      for (int c = 0; c < count; ++c) {
        VertexSet part(d.order());
        for (int v = 0; v < d.order(); ++v) {
          if (comp[static_cast<std::size_t>(v)] == c) part.insert(v);
        }
        sum += forcing_number_brute(induced_subgraph(d, part).graph, k).value;
      }
      if (whole != sum) out.fail(describe(d, k), "F_k vs sum over components: " + pair_text(whole, sum));
    }
  });
}

// ---------------------------------------------------------------- mof / MOF checks

void check_c9(const SuiteOptions& o, GraphTable& table, CheckResult& r) {
  pool(graph_universe(o), o, r, [&](const Graph& g, Outcome& out) {
    const auto rho = path_cover_number(g).value;
    for (int k = 1; k <= 3; ++k) {
      const int mof = table.mof(g, k);
      const auto tc = tree_cover_number(g, k);
      if (mof != tc.value) out.fail(describe(g, k), "mof_k vs T_k: " + pair_text(mof, tc.value));
      if ((mof == 1) != (tc.value == 1)) out.fail(describe(g, k), "spanning (k+1)-tree disagreement");
      if (k == 1 && mof != rho) out.fail(describe(g, k), "mof vs rho: " + pair_text(mof, rho));
      const auto tco = tree_cover_orientation(g, tc.cover, k);
      if (tco.roots.count() != tc.value || !is_forcing_set(tco.orientation, tco.roots, k)) {
        out.fail(describe(g, k), "tree cover orientation roots " + tco.roots.to_string() + " do not force");
      }
    }
  });
}

void check_c10(const SuiteOptions& o, GraphTable& table, CheckResult& r) {
  pool(graph_universe(o), o, r, [&](const Graph& g, Outcome& out) {
    const int n = g.order();
    const int dmax = g.max_degree();
    const OrientedGraph d = max_degree_out_orientation(g);
    int hub = 0;
    for (int v = 1; v < n; ++v) {
      if (g.degree(v) > g.degree(hub)) hub = v;
    }
    for (int k = 1; k <= dmax + 1; ++k) {
      const int bound = std::max(n - k, n - dmax);
      const int mof = table.mof(g, k);
      if (mof > bound) out.fail(describe(g, k), "mof_k > max{n-k, n-Delta}: " + pair_text(mof, bound));
      VertexSet s = VertexSet::full(n);
      int drop = std::min(k, dmax);
      for (int w : d.out_neighbors(hub)) {
        if (drop-- <= 0) break;
        s.erase(w);
      }
      if (s.count() != bound || !is_forcing_set(d, s, k)) {
        out.fail(describe(g, k), "hub construction " + s.to_string() + " is not a forcing set of size " +
                                     std::to_string(bound));
      }
    }
  });
}

// Smallest reaching set over all balanced orientations, stopping at 1.
int min_balanced_reaching(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  int best = n + 1;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m) && best > 1; ++bits) {
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    std::vector<std::uint64_t> succ(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      const bool fwd = ((bits >> e) & 1U) != 0;
      const int t = fwd ? ed.u : ed.v;
      const int h = fwd ? ed.v : ed.u;
      ++out[static_cast<std::size_t>(t)];
      succ[static_cast<std::size_t>(t)] |= std::uint64_t{1} << h;
    }
    bool balanced = true;
    for (int v = 0; v < n && balanced; ++v) {
      balanced = std::abs(2 * out[static_cast<std::size_t>(v)] - g.degree(v)) <= 1;
    }
    if (!balanced) continue;
    std::vector<std::uint64_t> reach(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::uint64_t seen = std::uint64_t{1} << v;
      std::uint64_t frontier = seen;
      while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= succ[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = next & ~seen;
        seen |= next;
      }
      reach[static_cast<std::size_t>(v)] = seen;
    }
    // Source components: vertices reached by nobody outside their own component; count one per component.
    int roots = 0;
    std::uint64_t counted = 0;
    for (int v = 0; v < n; ++v) {
      if ((counted >> v) & 1U) continue;
      bool source = true;
      for (int u = 0; u < n && source; ++u) {
        const bool u_reaches_v = ((reach[static_cast<std::size_t>(u)] >> v) & 1U) != 0;
        const bool v_reaches_u = ((reach[static_cast<std::size_t>(v)] >> u) & 1U) != 0;
        if (u_reaches_v && !v_reaches_u) source = false;
      }
      if (!source) continue;
      ++roots;
      for (int u = 0; u < n; ++u) {
        if (((reach[static_cast<std::size_t>(u)] >> v) & 1U) && ((reach[static_cast<std::size_t>(v)] >> u) & 1U)) {
          counted |= std::uint64_t{1} << u;
        }
      }
    }
    best = std::min(best, roots);
  }
  return best;
}

void check_c11(const SuiteOptions& o, GraphTable& table, CheckResult& r) {
  pool(graph_universe(o), o, r, [&](const Graph& g, Outcome& out) {
    const int n = g.order();
    const OrientedGraph b = balanced_orientation(g);
    if (!is_balanced(b)) out.fail(describe(g), "constructed orientation is not balanced: " + b.bit_string());
    if (b.min_out_degree() < g.min_degree() / 2) out.fail(describe(g), "balanced delta+ below floor(delta/2)");
    const bool hyp = is_connected(g) && g.min_degree() >= 2;
    const bool two_ec = is_two_edge_connected(g);
    if (!hyp && !two_ec) {
      out.skipped = true;
      return;
    }
    const int half = (g.max_degree() + 1) / 2;
    const int mof = table.mof(g, 1);
    const auto rw = static_cast<std::int64_t>(min_reaching_set(b).root_list.size());
    const int rmin = rw == 1 ? 1 : min_balanced_reaching(g);
    if (hyp) {
      const Rational witnessed(static_cast<std::int64_t>(half - 1) * n + rw, half);
      const Rational exact(static_cast<std::int64_t>(half - 1) * n + rmin, half);
      if (Rational(mof) > witnessed) out.fail(describe(g), "mof above witnessed balanced bound " + witnessed.to_string());
      if (Rational(mof) > exact) out.fail(describe(g), "mof above balanced bound " + exact.to_string());
    }
    if (two_ec) {
      if (rmin != 1) out.fail(describe(g), "2-edge-connected but no balanced orientation is reachable");
      const Rational bound(static_cast<std::int64_t>(half - 1) * n + 1, half);
      if (Rational(mof) > bound) out.fail(describe(g), "mof above 2-edge-connected bound " + bound.to_string());
    }
  });
}

void check_c12(const SuiteOptions& o, GraphTable&, CheckResult& r) {
  std::vector<Graph> stars;
  for (int n = 3; n <= 10; ++n) stars.push_back(star_graph(n - 1));
  pool(stars, o, r, [](const Graph& g, Outcome& out) {
    const int n = g.order();
    ExtremeOptions eo;
    eo.tree_cover_exit = false;
    for (int k = 1; k < n - 1; ++k) {
      const int mof = min_oriented_forcing_number(g, k, eo).value;
      if (mof != n - k - 1) out.fail(describe(g, k), "mof_k vs n-k-1: " + pair_text(mof, n - k - 1));
      // Centre 0 points at k leaves, the rest point at the centre.
      std::vector<bool> dir(static_cast<std::size_t>(g.size()));
      for (int e = 0; e < g.size(); ++e) dir[static_cast<std::size_t>(e)] = e < k;
      const int f = fk(orient(g, dir), k);
      if (f != n - k - 1) out.fail(describe(g, k), "realizing orientation F_k vs n-k-1: " + pair_text(f, n - k - 1));
    }
  });
}

void check_c13(const SuiteOptions& o, GraphTable& table, CheckResult& r) {
  pool(graph_universe(o), o, r, [&](const Graph& g, Outcome& out) {
    const int n = g.order();
    for (int k = 1; k <= 2; ++k) {
      const int whole = table.MOF(g, k);
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        const auto h = induced_subgraph(g, VertexSet::from_mask(n, mask));
        const int part = table.MOF(h.graph, k);
        if (part > whole) {
          out.fail(describe(g, k), "MOF_k(H) > MOF_k(G) for H = " + VertexSet::from_mask(n, mask).to_string() + ": " +
                                       pair_text(part, whole));
        }
      }
    }
  });
  // For one fixed orientation, F is not monotone under induced subgraphs: the path H and the
  // in-star K inside D_p give F(H) < F(D_p) < F(K) = p/2.
  for (int p = 6; p <= 10; p += 2) {
    const OrientedGraph d = gp_orientation(p);
    std::vector<int> path(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) path[static_cast<std::size_t>(i)] = i;
    std::vector<int> star{p};
    for (int i = 1; i < p; i += 2) star.push_back(i);
    const int fh = fk(induced_subgraph(d, VertexSet::from_list(p + 1, path)).graph, 1);
    const int fd = fk(d, 1);
    const int fkk = fk(induced_subgraph(d, VertexSet::from_list(p + 1, star)).graph, 1);
    ++r.instances;
    const std::string obs = "F(H) = " + std::to_string(fh) + ", F(D_p) = " + std::to_string(fd) +
                            ", F(K) = " + std::to_string(fkk);
    if (fh == 1 && fd == 2 && fkk == p / 2) {
      r.exhibits.push_back({describe(d), obs});
    } else {
      ++r.violation_count;
      r.violations.push_back({describe(d), "expected 1, 2, p/2; " + obs});
    }
  }
}

void check_c14(const SuiteOptions& o, GraphTable& table, CheckResult& r) {
  pool(graph_universe(o), o, r, [&](const Graph& g, Outcome& out) {
    const auto br = bridges(g);
    if (br.empty()) {
      out.skipped = true;
      return;
    }
    const int n = g.order();
    for (const Edge& e : br) {
      std::vector<Edge> rest;
      for (const Edge& f : g.edges()) {
        if (f != e) rest.push_back(f);
      }
      const auto comp = connected_components(Graph(n, rest));
      VertexSet side(n);
      for (int v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] == comp[static_cast<std::size_t>(e.u)]) side.insert(v);
      }
      const Graph g1 = induced_subgraph(g, side).graph;
      const Graph g2 = induced_subgraph(g, VertexSet::full(n) - side).graph;
      for (int k = 1; k <= 2; ++k) {
        const int whole = table.MOF(g, k);
        const int sum = table.MOF(g1, k) + table.MOF(g2, k);
        if (whole > sum) {
          out.fail(describe(g, k), "bridge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                       "}: MOF_k vs sum " + pair_text(whole, sum));
        }
      }
    }
  });
}

void check_c15(const SuiteOptions& o, GraphTable& table, CheckResult& r) {
  pool(graph_universe(o), o, r, [&](const Graph& g, Outcome& out) {
    const int delta = g.min_degree();
    for (int k = 1; k <= g.max_degree() + 1; ++k) {
      const int bound = std::max(delta / 2 - k + 1, 1);
      const int mof = table.MOF(g, k);
      if (mof < bound) out.fail(describe(g, k), "MOF_k < max{floor(delta/2) - k + 1, 1}: " + pair_text(mof, bound));
    }
    if (delta >= 2 && table.MOF(g, 1) < delta / 2) out.fail(describe(g), "MOF < floor(delta/2)");
  });
}

void check_c16(const SuiteOptions& o, GraphTable& table, CheckResult& r) {
  pool(graph_universe(o), o, r, [&](const Graph& g, Outcome& out) {
    const auto alpha = independence_number(g);
    const int dmax = g.max_degree();
    std::vector<int> ks{1, 2, std::max(1, dmax), dmax + 1};
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    const OrientedGraph away = orient_away_from(g, alpha.witness);
    for (int k : ks) {
      const int mof = table.MOF(g, k);
      if (mof < alpha.value) out.fail(describe(g, k), "MOF_k < alpha: " + pair_text(mof, alpha.value));
      if (k >= dmax && mof != alpha.value) out.fail(describe(g, k), "k >= Delta but MOF_k != alpha: " + pair_text(mof, alpha.value));
      const auto res = min_forcing_number(away, k);
      if (res.value < alpha.value || !alpha.witness.is_subset_of(res.witness)) {
        out.fail(describe(g, k), "orientation away from " + alpha.witness.to_string() + " has F_k = " +
                                     std::to_string(res.value));
      }
    }
  });
}

void check_c17(const SuiteOptions& o, GraphTable& table, CheckResult& r) {
  pool(graph_universe(o), o, r, [&](const Graph& g, Outcome& out) {
    const int n = g.order();
    const std::int64_t m = g.size();
    const VertexSet h = dense_subgraph(g);
    if (h.empty()) {
      out.fail(describe(g), "dense subgraph is empty");
    } else {
      const int dh = induced_subgraph(g, h).graph.min_degree();
      if (static_cast<std::int64_t>(dh) * n < m) out.fail(describe(g), "dense subgraph " + h.to_string() + " has delta below d/2");
    }
    if (g.min_degree() < 2) {
      out.skipped = true;
      return;
    }
    const auto bound = Rational(2 * m + n, 4 * static_cast<std::int64_t>(n)).floor();
    const int mof = table.MOF(g, 1);
    if (mof < bound) out.fail(describe(g), "MOF < floor((d+1)/4): " + pair_text(mof, bound));
  });
}

void check_c18(const SuiteOptions& o, GraphTable& table, CheckResult& r) {
  pool(graph_universe(o), o, r, [&](const Graph& g, Outcome& out) {
    int root = 0;
    while ((root + 1) * (root + 1) <= g.order()) ++root;
    const int mof = table.MOF(g, 1);
    if (mof < root / 2) out.fail(describe(g), "MOF < floor(sqrt(n)/2): " + pair_text(mof, root / 2));
  });
}

void check_c19(const SuiteOptions& o, GraphTable& table, CheckResult& r) {
  pool(graph_universe(o), o, r, [&](const Graph& g, Outcome& out) {
    const int n = g.order();
    const auto top = max_oriented_forcing_number(g, 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      const VertexSet w = VertexSet::from_mask(n, mask);
      const auto h = induced_subgraph(top.orientation, w);
      const int fh = fk(h.graph, 1);
      const int size = w.count();
      if (top.value > fh + n - size) {
        out.fail(describe(top.orientation), "MOF > F(H) + n - |H| for H = " + w.to_string());
      }
      const int mh = table.MOF(h.graph.underlying(), 1);
      if (fh > mh) out.fail(describe(top.orientation), "F(H) > MOF(H) for H = " + w.to_string());
    }
  });
}

void check_c20(const SuiteOptions& o, GraphTable& table, CheckResult& r) {
  pool(graph_universe(o), o, r, [&](const Graph& g, Outcome& out) {
    const auto mim = induced_matching_number(g).value;
    const int mof = table.MOF(g, 1);
    if (mof > g.order() - mim) out.fail(describe(g), "MOF > n - mim: " + pair_text(mof, g.order() - mim));
  });
}

void check_c21(const SuiteOptions& o, GraphTable& table, CheckResult& r) {
  pool(graph_universe(o), o, r, [&](const Graph& g, Outcome& out) {
    // MOF <= n - log2(omega)/2  <=>  omega <= 4^(n - MOF).
    const auto omega = clique_number(g).value;
    const int gap = g.order() - table.MOF(g, 1);
    if (gap < 0 || (gap < 31 && omega > (std::int64_t{1} << (2 * gap)))) {
      out.fail(describe(g), "MOF > n - log2(omega)/2 with omega = " + std::to_string(omega));
    }
  });
}

void check_c22(const SuiteOptions& o, GraphTable&, CheckResult& r) {
  pool(tree_universe(o), o, r, [](const Graph& t, Outcome& out) {
    const auto alpha = independence_number(t).value;
    const int mof = max_oriented_forcing_number(t, 1).value;
    if (mof != alpha) out.fail(describe(t), "MOF(T) vs alpha(T): " + pair_text(mof, alpha));
  });
}

void check_c23(const SuiteOptions& o, GraphTable& table, CheckResult& r) {
  pool(graph_universe(o), o, r, [&](const Graph& g, Outcome& out) {
    const int n = g.order();
    const int dmax = g.max_degree();
    const auto rho = path_cover_number(g).value;
    const auto alpha = independence_number(g).value;
    const auto t1 = tree_cover_number(g, 1).value;
    if (t1 != rho) out.fail(describe(g), "T_1 vs rho: " + pair_text(t1, rho));
    if (rho > alpha) out.fail(describe(g), "rho > alpha: " + pair_text(rho, alpha));
    const int kmax = std::max(1, dmax);
    const int mof_top = table.mof(g, kmax);
    const int max_top = table.MOF(g, kmax);
    if (max_top != alpha) out.fail(describe(g, kmax), "MOF_Delta vs alpha: " + pair_text(max_top, alpha));
    int prev_min = -1;
    int prev_max = -1;
    for (int k = 1; k <= kmax; ++k) {
      const int lo = table.mof(g, k);
      const int hi = table.MOF(g, k);
      if (prev_min >= 0 && lo > prev_min) out.fail(describe(g, k), "mof_k increased with k");
      if (prev_max >= 0 && hi > prev_max) out.fail(describe(g, k), "MOF_k increased with k");
      if (mof_top > lo || lo > table.mof(g, 1)) out.fail(describe(g, k), "mof chain broken");
      if (max_top > hi || hi > table.MOF(g, 1)) out.fail(describe(g, k), "MOF chain broken");
      prev_min = lo;
      prev_max = hi;
    }
    if (table.mof(g, 1) != rho) out.fail(describe(g), "mof vs rho: " + pair_text(table.mof(g, 1), rho));
    if (g.size() > 0 && table.MOF(g, 1) > n - 1) out.fail(describe(g), "MOF > n - 1");
  });
  // Paths: mof(P_n) = 1 and MOF(P_n) = ceil(n/2).
  for (int n = 2; n <= 10; ++n) {
    const Graph p = path_graph(n);
    const int lo = table.mof(p, 1);
    const int hi = table.MOF(p, 1);
    ++r.instances;
    if (lo != 1 || hi != (n + 1) / 2) {
      ++r.violation_count;
      r.violations.push_back({describe(p), "mof, MOF = " + pair_text(lo, hi)});
    }
  }
}

void check_c24(const SuiteOptions& o, GraphTable&, CheckResult& r) {
  pool(tree_universe(o), o, r, [](const Graph& t, Outcome& out) {
    const int n = t.order();
    const auto diam = diameter(t);
    if (!diam || *diam < 3) {
      out.skipped = true;
      return;
    }
    // All-pairs distances and parents by BFS from every vertex.
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    std::vector<std::vector<int>> parent = dist;
    for (int s = 0; s < n; ++s) {
      auto& ds = dist[static_cast<std::size_t>(s)];
      std::vector<int> queue{s};
      ds[static_cast<std::size_t>(s)] = 0;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        const int x = queue[i];
        for (int y : t.neighbors(x)) {
          if (ds[static_cast<std::size_t>(y)] >= 0) continue;
          ds[static_cast<std::size_t>(y)] = ds[static_cast<std::size_t>(x)] + 1;
          parent[static_cast<std::size_t>(s)][static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        }
      }
    }
    const auto alpha = independence_number(t).value;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != *diam) continue;
        // Path from v to u: the stem w of u is u's parent seen from v, z is w's parent.
        const int w = parent[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
        const int z = parent[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
        const std::string where = "u=" + std::to_string(u) + ", v=" + std::to_string(v);
        int q = 0;
        for (int y : t.neighbors(w)) {
          if (y == z) continue;
          if (t.degree(y) != 1) out.fail(describe(t), where + ": neighbour " + std::to_string(y) + " of the stem is not a leaf");
          ++q;
        }
        if (t.degree(z) == 1) out.fail(describe(t), where + ": z is a leaf");
        VertexSet keep = VertexSet::full(n);
        keep.erase(w);
        for (int y : t.neighbors(w)) {
          if (y != z) keep.erase(y);
        }
        const Graph star = induced_subgraph(t, keep).graph;
        const auto a_star = independence_number(star).value;
        if (!is_connected(star) || star.order() != n - q - 1) out.fail(describe(t), where + ": T* is not a tree on n - q - 1 vertices");
        if (a_star > alpha - q) out.fail(describe(t), where + ": alpha(T*) > alpha(T) - q: " + pair_text(a_star, alpha - q));
      }
    }
  });
}

using CheckFn = void (*)(const SuiteOptions&, GraphTable&, CheckResult&);

struct CatalogEntry {
  CheckSpec spec;
  CheckFn fn;
  enum class Universe { Oriented, Graphs, Trees, Family } universe;
};

const std::vector<CatalogEntry>& entries() {
  using U = CatalogEntry::Universe;
  static const std::vector<CatalogEntry> list = {
      {{"C1", "F_k is non-increasing in k; supersets of forcing sets force", "F_k(D) >= F_{k+1}(D)", "", false}, check_c1, U::Oriented},
      {{"C2", "reachable D with k >= Delta+ has F_k = 1", "F_k(D) = 1 if D reachable and k >= Delta+", "", false}, check_c2, U::Oriented},
      {{"C3", "minimum out-degree lower bound", "F_k(D) >= max{delta+ - k + 1, 1}", "", false}, check_c3, U::Oriented},
      {{"C4", "forcing chains form |S| k-ary out-trees", "#chains = |S|, each vertex <= k chain children", "", false}, check_c4, U::Oriented},
      {{"C5", "induced k-ary tree cover lower bound", "F_k(D) >= IT_k(D)", "", false}, check_c5, U::Oriented},
      {{"C6", "reversal invariance at k = 1; out-star counterexample for k >= 2", "F(D) = F(D'); out-star: F_k(D) = n-k, F_k(D') = n-1", "", true}, check_c6, U::Oriented},
      {{"C7", "greedy forcing set certificates", "F_k(D) <= ((Delta+ - k) n + r k) / Delta+ <= ((Delta+ - 1) n + alpha k) / Delta+; strongly reachable form; complete out-tree equality", "", false}, check_c7, U::Oriented},
      {{"C8", "additivity over weak components", "F_k(D) = sum_i F_k(D_i)", "", false}, check_c8, U::Oriented},
      {{"C9", "mof_k equals the (k+1)-tree cover number", "mof_k(G) = T_k(G), mof(G) = rho(G), mof_k(G) = 1 iff spanning (k+1)-tree", "", false}, check_c9, U::Graphs},
      {{"C10", "max-degree star upper bound on mof_k", "mof_k(G) <= max{n - k, n - Delta}", "", false}, check_c10, U::Graphs},
      {{"C11", "balanced orientation upper bounds on mof", "mof(G) <= ((ceil(Delta/2) - 1) n + r) / ceil(Delta/2); r = 1 when 2-edge-connected", "", false}, check_c11, U::Graphs},
      {{"C12", "stars", "mof_k(K_{1,n-1}) = n - k - 1 for k < n - 1", "stars K_{1,n-1}, 3 <= n <= 10", false}, check_c12, U::Family},
      {{"C13", "MOF_k is monotone under induced subgraphs; F is not", "MOF_k(G) >= MOF_k(H) for induced H; F(H) < F(D_p) < F(K)", "", true}, check_c13, U::Graphs},
      {{"C14", "bridge subadditivity", "MOF_k(G) <= MOF_k(G_1) + MOF_k(G_2) across a bridge", "", false}, check_c14, U::Graphs},
      {{"C15", "half minimum degree lower bound", "MOF_k(G) >= max{floor(delta/2) - k + 1, 1}", "", false}, check_c15, U::Graphs},
      {{"C16", "independence number lower bound, equality for k >= Delta", "MOF_k(G) >= alpha(G); MOF_k(G) = alpha(G) if k >= Delta", "", false}, check_c16, U::Graphs},
      {{"C17", "average degree lower bound (delta >= 2)", "MOF(G) >= floor((d + 1) / 4); dense subgraph has delta(H) >= d/2", "", false}, check_c17, U::Graphs},
      {{"C18", "square root lower bound", "MOF(G) >= floor(sqrt(n) / 2)", "", false}, check_c18, U::Graphs},
      {{"C19", "induced subgraph upper bound", "MOF(G) <= F(H) + n - |H| <= MOF(H) + n - |H|", "", false}, check_c19, U::Graphs},
      {{"C20", "induced matching upper bound", "MOF(G) <= n - mim(G)", "", false}, check_c20, U::Graphs},
      {{"C21", "clique upper bound", "MOF(G) <= n - log2(omega(G)) / 2", "", false}, check_c21, U::Graphs},
      {{"C22", "trees", "MOF(T) = alpha(T)", "", false}, check_c22, U::Trees},
      {{"C23", "chain of inequalities", "mof_Delta <= mof_k <= mof = rho <= alpha = MOF_Delta <= MOF_k <= MOF <= n - 1; paths", "", false}, check_c23, U::Graphs},
      {{"C24", "stem structure in trees of diameter >= 3", "stem neighbours other than z are leaves; alpha(T*) <= alpha(T) - q", "", false}, check_c24, U::Trees},
  };
  return list;
}

const CatalogEntry& find_entry(const std::string& id) {
  for (const auto& e : entries()) {
    if (e.spec.id == id) return e;
  }
  throw ParameterError("unknown check id '" + id + "'");
}

std::string universe_text(const CatalogEntry& e, const SuiteOptions& o) {
  using U = CatalogEntry::Universe;
  switch (e.universe) {
    case U::Oriented:
      return universe_oriented(o);
    case U::Graphs:
      return universe_graphs(o);
    case U::Trees:
      return universe_trees(o);
    case U::Family:
      return e.spec.universe;
  }
  return {};
}

}  // namespace

int GraphTable::lookup(const Graph& g, int k, bool maximize) {
  const auto key = std::make_tuple(g.order(), labeled_code(g), k, maximize);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = values_.find(key); it != values_.end()) return it->second;
  }
  ExtremeOptions eo;
  eo.tree_cover_exit = false;  // verification must not lean on mof_k = T_k
  const int value = maximize ? max_oriented_forcing_number(g, k, eo).value : min_oriented_forcing_number(g, k, eo).value;
  std::lock_guard<std::mutex> lock(mu_);
  values_.emplace(key, value);
  return value;
}

int GraphTable::mof(const Graph& g, int k) { return lookup(g, k, false); }
int GraphTable::MOF(const Graph& g, int k) { return lookup(g, k, true); }

const std::vector<CheckSpec>& check_catalog() {
  static const std::vector<CheckSpec> specs = [] {
    std::vector<CheckSpec> out;
    const SuiteOptions defaults;
    for (const auto& e : entries()) {
      CheckSpec s = e.spec;
      s.universe = universe_text(e, defaults);
      out.push_back(s);
    }
    return out;
  }();
  return specs;
}

void validate_suite_options(const SuiteOptions& o) {
  if (o.nmax < 1) throw ParameterError("nmax must be at least 1");
  require_limit(o.nmax, kGraphLimit, "nmax for exact mof/MOF over labeled graphs");
  require_limit(tree_nmax(o), kTreeLimit, "tree order for exact MOF over labeled trees");
  require_limit(std::min(o.nmax, o.orientation_nmax), 5, "order for exhaustive oriented graphs");
  require_limit(o.random_nmax, 12, "order for random orientations");
  if (o.random_cases < 0) throw ParameterError("random case count must be non-negative");
  if (o.threads < 1) throw ParameterError("threads must be at least 1");
}

CheckResult run_check(const std::string& id, const SuiteOptions& options, GraphTable& table) {
  validate_suite_options(options);
  const CatalogEntry& e = find_entry(id);
  CheckResult r;
  r.id = e.spec.id;
  r.needs_exhibit = e.spec.needs_exhibit;
  const auto start = std::chrono::steady_clock::now();
  e.fn(options, table, r);
  r.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CheckResult run_check(const std::string& id, const SuiteOptions& options) {
  GraphTable table;
  return run_check(id, options, table);
}

std::vector<CheckResult> run_suite(const std::vector<std::string>& ids, const SuiteOptions& options) {
  validate_suite_options(options);
  std::vector<std::string> todo = ids;
  if (todo.empty()) {
    for (const auto& e : entries()) todo.push_back(e.spec.id);
  }
  for (const auto& id : todo) find_entry(id);
  GraphTable table;
  std::vector<CheckResult> out;
  for (const auto& id : todo) out.push_back(run_check(id, options, table));
  return out;
}

json to_json(const CheckResult& r) {
  auto findings = [](const std::vector<Finding>& list) {
    json a = json::array();
    for (const auto& f : list) a.push_back({{"instance", json::parse(f.instance)}, {"observed", f.observed}});
    return a;
  };
  return {{"id", r.id},
          {"passed", r.passed()},
          {"instances", r.instances},
          {"skipped", r.skipped},
          {"violation_count", r.violation_count},
          {"violations", findings(r.violations)},
          {"exhibits", findings(r.exhibits)},
          {"runtime", r.runtime}};
}

// ---------------------------------------------------------------- scanners

ScanReport scan(const std::string& problem, const ScanOptions& options) {
  if (problem != "p1" && problem != "p2" && problem != "p3" && problem != "p4") {
    throw ParameterError("unknown problem '" + problem + "' (expected p1, p2, p3 or p4)");
  }
  if (options.trees) {
    require_limit(options.nmax, kTreeLimit, "nmax for exact MOF over labeled trees");
  } else {
    require_limit(options.nmax, kGraphLimit, "nmax for exact MOF over connected labeled graphs");
  }
  if (options.k < 0) throw ParameterError("k must be non-negative");

  ScanReport report;
  report.problem = problem;
  report.universe = std::string(options.trees ? "every labeled tree" : "every connected labeled graph") +
                    " on 2 <= n <= " + std::to_string(options.nmax);
  std::vector<Graph> graphs;
  for (int n = 2; n <= options.nmax; ++n) {
    if (options.trees) {
      for_each_labeled_tree(n, [&](const Graph& g) { graphs.push_back(g); });
    } else {
      for_each_labeled_graph(n, true, [&](const Graph& g) { graphs.push_back(g); });
    }
  }
  const std::size_t family_start = graphs.size();
  if (problem == "p4") {
    // Complete bipartite graphs, claimed to reach n - 1.
    for (int x = 1; x <= 6; ++x) {
      for (int y = x; x + y <= 7; ++y) graphs.push_back(complete_bipartite_graph(x, y));
    }
  }

  std::vector<std::vector<ScanRecord>> per(graphs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex fail_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= graphs.size() || failed) return;
      try {
        const Graph& g = graphs[i];
        const int n = g.order();
        std::vector<int> ks{1};
        if (problem == "p1") {
          ks.clear();
          if (options.k > 0) {
            ks.push_back(options.k);
          } else {
            for (int k = 1; k <= std::max(1, g.max_degree()); ++k) ks.push_back(k);
          }
        }
        for (int k : ks) {
          const auto res = max_oriented_forcing_number(g, k);
          if (!is_forcing_set(res.orientation, res.witness, k) || res.witness.count() != res.value) {
            throw std::logic_error("uncertified MOF witness");
          }
          ScanRecord rec{g, k, res.value, res.orientation.bit_string(), res.witness.members(), 0.0, false};
          if (problem == "p1") {
            rec.threshold = static_cast<double>((n + k) / (k + 1));
            rec.satisfied = res.value * (k + 1) >= n;
          } else if (problem == "p2") {
            rec.threshold = n / 2.0;
            rec.satisfied = 2 * res.value >= n;
          } else if (problem == "p3") {
            const auto mu = matching_number(g).value;
            rec.threshold = static_cast<double>(n - mu);
            rec.satisfied = res.value >= n - mu;
          } else {
            rec.threshold = static_cast<double>(n - 1);
            rec.satisfied = res.value == n - 1;
          }
          per[i].push_back(std::move(rec));
        }
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(fail_mu);
        failed = true;
        failure = e.what();
      }
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> team;
    for (int t = 0; t < threads; ++t) team.emplace_back(worker);
    for (auto& th : team) th.join();
  }
  if (failed) throw std::runtime_error("scan aborted: " + failure);

  double min_ratio = 2.0;
  std::map<int, int> extremal_by_order;
  for (std::size_t i = 0; i < per.size(); ++i) {
    for (auto& rec : per[i]) {
      const bool family = i >= family_start;
      if (problem == "p4") {
        if (family) {
          if (!rec.satisfied) report.counterexamples.push_back(rec);
          continue;
        }
        if (rec.satisfied) ++extremal_by_order[rec.graph.order()];
      } else if (!rec.satisfied) {
        report.counterexamples.push_back(rec);
      }
      if (problem == "p2") min_ratio = std::min(min_ratio, static_cast<double>(rec.value) / rec.graph.order());
      report.records.push_back(std::move(rec));
    }
  }
  if (problem == "p2" && !report.records.empty()) report.notes.push_back("minimum MOF/n = " + std::to_string(min_ratio));
  if (problem == "p4") {
    for (const auto& [n, count] : extremal_by_order) {
      report.notes.push_back("n = " + std::to_string(n) + ": " + std::to_string(count) + " graphs with MOF = n - 1");
    }
    report.notes.push_back("complete bipartite K_{x,y}, x + y <= 7: " +
                           std::string(report.counterexamples.empty() ? "all have MOF = n - 1" : "exceptions listed"));
  }
  report.verdict = report.counterexamples.empty() ? "no counterexample in universe" : "counterexample found";
  return report;
}

json to_json(const ScanReport& r, bool include_records) {
  auto record = [](const ScanRecord& s) {
    return json{{"graph", to_json(s.graph)},   {"k", s.k},
                {"value", s.value},            {"orientation", s.orientation_bits},
                {"witness", s.witness},        {"threshold", s.threshold},
                {"satisfied", s.satisfied}};
  };
  json j = {{"problem", r.problem}, {"universe", r.universe}, {"verdict", r.verdict}, {"notes", r.notes},
            {"record_count", r.records.size()}};
  json ce = json::array();
  for (const auto& s : r.counterexamples) ce.push_back(record(s));
  j["counterexamples"] = ce;
  if (include_records) {
    json recs = json::array();
    for (const auto& s : r.records) recs.push_back(record(s));
    j["records"] = recs;
  }
  return j;
}

}  // namespace okf
