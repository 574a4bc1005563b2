#include "okforce/bounds.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "okforce/constructions.hpp"
#include "okforce/errors.hpp"
#include "okforce/forcing.hpp"
#include "okforce/invariants.hpp"
#include "okforce/solver.hpp"

namespace okf {

namespace {

struct GreedyState {
  const OrientedGraph& d;
  std::vector<char> colored;
  std::vector<int> open;  // uncolored out-neighbours per vertex

  explicit GreedyState(const OrientedGraph& dg)
      : d(dg), colored(static_cast<std::size_t>(dg.order()), 0), open(static_cast<std::size_t>(dg.order())) {
    for (int v = 0; v < d.order(); ++v) open[static_cast<std::size_t>(v)] = d.out_degree(v);
  }

  void color(int v) {
    colored[static_cast<std::size_t>(v)] = 1;
    for (int u : d.in_neighbors(v)) --open[static_cast<std::size_t>(u)];
  }

  // Colors all but `keep` of v's uncolored out-neighbours, smallest first.
  std::vector<int> color_all_but(int v, int keep) {
    std::vector<int> out;
    int take = open[static_cast<std::size_t>(v)] - keep;
    for (int w : d.out_neighbors(v)) {
      if (take <= 0) break;
      if (colored[static_cast<std::size_t>(w)]) continue;
      color(w);
      out.push_back(w);
      --take;
    }
    return out;
  }

  void propagate(int k) {
    std::vector<int> work;
    for (int v = 0; v < d.order(); ++v) {
      if (colored[static_cast<std::size_t>(v)]) work.push_back(v);
    }
    while (!work.empty()) {
      const int u = work.back();
      work.pop_back();
      const int o = open[static_cast<std::size_t>(u)];
      if (o < 1 || o > k) continue;
      for (int w : d.out_neighbors(u)) {
        if (colored[static_cast<std::size_t>(w)]) continue;
        color(w);
        work.push_back(w);
        for (int x : d.in_neighbors(w)) {
          if (colored[static_cast<std::size_t>(x)]) work.push_back(x);
        }
      }
    }
  }
};

BoundEntry entry(std::string name, std::string side, std::string target, Rational value, bool applicable,
                 std::string reason, std::string anchor) {
  return {std::move(name), std::move(side), std::move(target), value, applicable, std::move(reason), std::move(anchor)};
}

BoundEntry inapplicable(std::string name, std::string side, std::string target, std::string reason, std::string anchor) {
  return entry(std::move(name), std::move(side), std::move(target), Rational(0), false, std::move(reason),
               std::move(anchor));
}

std::int64_t isqrt(std::int64_t x) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// ceil(a / b) for positive b.
int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

GreedyCertificate greedy_forcing_set(const OrientedGraph& d, int k, const GreedyOptions& options) {
  if (k <= 0) throw ParameterError("k must be a positive integer");
  const int n = d.order();
  if (n == 0) throw ParameterError("greedy forcing set needs at least one vertex");
  const int dmax = d.max_out_degree();
  const int dmin = d.min_out_degree();
  if (k > dmax) {
    throw Inapplicable("k = " + std::to_string(k) + " exceeds the maximum out-degree " + std::to_string(dmax));
  }

  GreedyCertificate cert;
  switch (options.policy) {
    case RootPolicy::First: {
      cert.roots = min_reaching_set(d).root_list;
      const auto r = static_cast<std::int64_t>(cert.roots.size());
      if (r == 1) {
        cert.bound = Rational(static_cast<std::int64_t>(dmax - k) * n + k, dmax);
        cert.bound_name = "reachable";
      } else {
        cert.bound = Rational(static_cast<std::int64_t>(dmax - k) * n + r * k, dmax);
        cert.bound_name = "reaching_set";
      }
      break;
    }
    case RootPolicy::MinOutDegree: {
      if (!is_strongly_reachable(d)) throw Inapplicable("orientation is not strongly reachable");
      int root = 0;
      for (int v = 1; v < n; ++v) {
        if (d.out_degree(v) < d.out_degree(root)) root = v;
      }
      cert.roots = {root};
      const std::int64_t extra = std::max<std::int64_t>(static_cast<std::int64_t>(k) * (dmin - dmax + 1),
                                                        static_cast<std::int64_t>(dmin) * (k - dmax) + k);
      cert.bound = Rational(static_cast<std::int64_t>(dmax - k) * n + extra, dmax);
      cert.bound_name = "strongly_reachable";
      break;
    }
    case RootPolicy::Vertex: {
      if (options.root < 0 || options.root >= n) throw ParameterError("root vertex out of range");
      if (reachable_from(d, options.root).count() != n) {
        throw Inapplicable("vertex " + std::to_string(options.root) + " does not reach every vertex");
      }
      cert.roots = {options.root};
      cert.bound = Rational(static_cast<std::int64_t>(dmax - k) * n + k, dmax);
      cert.bound_name = "reachable";
      break;
    }
  }

  GreedyState st(d);
  cert.set = VertexSet(n);
  for (int root : cert.roots) {
    if (st.colored[static_cast<std::size_t>(root)]) continue;
    st.color(root);
    cert.set.insert(root);
    for (int w : st.color_all_but(root, k)) cert.set.insert(w);
    const VertexSet reach = reachable_from(d, root);
    for (;;) {
      st.propagate(k);
      int stalled = -1;
      bool done = true;
      reach.for_each([&](int v) {
        if (!st.colored[static_cast<std::size_t>(v)]) done = false;
      });
      if (done) break;
      for (int v = 0; v < n && stalled < 0; ++v) {
        if (st.colored[static_cast<std::size_t>(v)] && st.open[static_cast<std::size_t>(v)] > k) stalled = v;
      }
      if (stalled < 0) throw std::logic_error("greedy forcing stalled with nothing to repair");
      StallRepair repair{stalled, st.color_all_but(stalled, k)};
      for (int w : repair.colored) cert.set.insert(w);
      cert.repairs.push_back(std::move(repair));
    }
  }
  if (!is_forcing_set(d, cert.set, k)) throw std::logic_error("greedy set failed to force");
  return cert;
}

BoundReport lower_bound_report(const OrientedGraph& d, int k) {
  if (k <= 0) throw ParameterError("k must be a positive integer");
  const int n = d.order();
  BoundReport report;
  const std::string anchor_deg = "F_k(D) >= max{delta+ - k + 1, 1}";
  if (n == 0) {
    report.push_back(inapplicable("min_out_degree", "lower", "F_k", "empty graph", anchor_deg));
  } else {
    report.push_back(entry("min_out_degree", "lower", "F_k", std::max(d.min_out_degree() - k + 1, 1), true,
                           "any oriented graph", anchor_deg));
  }
  int sources = 0;
  for (int v = 0; v < n; ++v) sources += d.in_degree(v) == 0 ? 1 : 0;
  report.push_back(entry("sources", "lower", "F_k", sources, true, "in-degree-0 vertices are never forced",
                         "F_k(D) >= |{v : d-(v) = 0}|"));
  const std::string anchor_it = "F_k(D) >= IT_k(D)";
  const InvariantLimits lim;
  if (n > lim.max_kary_cover_order) {
    report.push_back(inapplicable("induced_kary_cover", "lower", "F_k",
                                  "order above " + std::to_string(lim.max_kary_cover_order), anchor_it));
  } else {
    report.push_back(entry("induced_kary_cover", "lower", "F_k", induced_kary_cover_number(d, k).value, true,
                           "any oriented graph", anchor_it));
  }
  return report;
}

BoundReport forcing_bound_report(const OrientedGraph& d, int k) {
  BoundReport report = lower_bound_report(d, k);
  const int n = d.order();
  if (n == 0) return report;
  const int dmax = d.max_out_degree();
  const int dmin = d.min_out_degree();
  const bool reachable = is_reachable(d);
  const bool strong = is_strongly_reachable(d);
  const bool k_ok = k <= dmax;
  const std::string k_fail = "requires k <= Delta+ = " + std::to_string(dmax);
  const auto r = static_cast<std::int64_t>(min_reaching_set(d).root_list.size());
  const std::int64_t base = static_cast<std::int64_t>(dmax - k) * n;

  const std::string anchor_large = "F_k(D) = 1 for reachable D with k >= Delta+";
  if (reachable && k >= dmax) {
    report.push_back(entry("large_k", "upper", "F_k", 1, true, "reachable, k >= Delta+", anchor_large));
  } else {
    report.push_back(inapplicable("large_k", "upper", "F_k", reachable ? "requires k >= Delta+" : "not reachable",
                                  anchor_large));
  }

  const std::string anchor_reach = "F_k(D) <= ((Delta+ - k) n + k) / Delta+";
  if (!reachable) {
    report.push_back(inapplicable("greedy_reachable", "upper", "F_k", "not reachable", anchor_reach));
  } else if (!k_ok) {
    report.push_back(inapplicable("greedy_reachable", "upper", "F_k", k_fail, anchor_reach));
  } else {
    report.push_back(entry("greedy_reachable", "upper", "F_k", Rational(base + k, dmax), true,
                           "reachable, k <= Delta+", anchor_reach));
  }

  const std::string anchor_rs = "F_k(D) <= ((Delta+ - k) n + r k) / Delta+";
  if (!k_ok) {
    report.push_back(inapplicable("greedy_reaching_set", "upper", "F_k", k_fail, anchor_rs));
  } else {
    report.push_back(entry("greedy_reaching_set", "upper", "F_k", Rational(base + r * k, dmax), true,
                           "k <= Delta+, r = " + std::to_string(r), anchor_rs));
  }

  const std::string anchor_alpha = "F_k(D) <= ((Delta+ - 1) n + alpha(G) k) / Delta+";
  const InvariantLimits lim;
  if (!k_ok) {
    report.push_back(inapplicable("greedy_independence", "upper", "F_k", k_fail, anchor_alpha));
  } else if (n > lim.max_independence_order) {
    report.push_back(inapplicable("greedy_independence", "upper", "F_k",
                                  "order above " + std::to_string(lim.max_independence_order), anchor_alpha));
  } else {
    const auto alpha = independence_number(d.underlying()).value;
    report.push_back(entry("greedy_independence", "upper", "F_k",
                           Rational(static_cast<std::int64_t>(dmax - 1) * n + alpha * k, dmax), true,
                           "k <= Delta+", anchor_alpha));
  }

  const std::string anchor_strong =
      "F_k(D) <= ((Delta+ - k) n + max{k(delta+ - Delta+ + 1), delta+(k - Delta+) + k}) / Delta+";
  if (!strong) {
    report.push_back(inapplicable("greedy_strongly_reachable", "upper", "F_k", "not strongly reachable", anchor_strong));
  } else if (!k_ok) {
    report.push_back(inapplicable("greedy_strongly_reachable", "upper", "F_k", k_fail, anchor_strong));
  } else {
    const std::int64_t extra = std::max<std::int64_t>(static_cast<std::int64_t>(k) * (dmin - dmax + 1),
                                                      static_cast<std::int64_t>(dmin) * (k - dmax) + k);
    report.push_back(entry("greedy_strongly_reachable", "upper", "F_k", Rational(base + extra, dmax), true,
                           "strongly reachable, k <= Delta+", anchor_strong));
  }

  const std::string anchor_cert = "F_k(D) <= |greedy set|";
  if (!k_ok) {
    report.push_back(inapplicable("greedy_certificate", "upper", "F_k", k_fail, anchor_cert));
  } else {
    const auto cert = greedy_forcing_set(d, k);
    report.push_back(entry("greedy_certificate", "upper", "F_k", cert.set.count(), true,
                           "verified forcing set " + cert.set.to_string(), anchor_cert));
  }
  return report;
}

BoundReport extremal_bound_report(const Graph& g, int k, const ExtremalOptions& options) {
  if (k <= 0) throw ParameterError("k must be a positive integer");
  const int n = g.order();
  const int m = g.size();
  BoundReport report;
  if (n == 0) return report;
  const int dmin = g.min_degree();
  const int dmax = g.max_degree();
  const bool connected = is_connected(g);
  const InvariantLimits lim;
  ExtremeOptions exact;
  exact.limits.max_orientation_edges = options.max_exact_edges;

  // mof_k upper bounds. The balanced-orientation bounds concern mof = mof_1 >= mof_k.
  report.push_back(entry("max_degree_star", "upper", "mof_k", std::max(n - k, n - dmax), true, "any graph",
                         "mof_k(G) <= max{n - k, n - Delta}"));

  const int half = ceil_div(dmax, 2);
  const std::string anchor_bal = "mof(G) <= ((ceil(Delta/2) - 1) n + r) / ceil(Delta/2)";
  if (!connected) {
    report.push_back(inapplicable("balanced_reaching_set", "upper", "mof_k", "not connected", anchor_bal));
  } else if (dmin < 2) {
    report.push_back(inapplicable("balanced_reaching_set", "upper", "mof_k", "requires delta >= 2", anchor_bal));
  } else {
    const auto r = static_cast<std::int64_t>(min_reaching_set(balanced_orientation(g)).root_list.size());
    report.push_back(entry("balanced_reaching_set", "upper", "mof_k",
                           Rational(static_cast<std::int64_t>(half - 1) * n + r, half), true,
                           "connected, delta >= 2; witnessed, possibly non-minimal r = " + std::to_string(r),
                           anchor_bal));
  }

  const std::string anchor_2ec = "mof(G) <= ((ceil(Delta/2) - 1) n + 1) / ceil(Delta/2)";
  if (!is_two_edge_connected(g)) {
    report.push_back(inapplicable("two_edge_connected", "upper", "mof_k", "not 2-edge-connected", anchor_2ec));
  } else {
    report.push_back(entry("two_edge_connected", "upper", "mof_k",
                           Rational(static_cast<std::int64_t>(half - 1) * n + 1, half), true, "2-edge-connected",
                           anchor_2ec));
  }

  // MOF_k lower bounds.
  report.push_back(entry("half_min_degree", "lower", "MOF_k", std::max(dmin / 2 - k + 1, 1), true, "any graph",
                         "MOF_k(G) >= max{floor(delta/2) - k + 1, 1}"));

  std::int64_t alpha = -1;
  const std::string anchor_alpha = "MOF_k(G) >= alpha(G)";
  if (n > lim.max_independence_order) {
    report.push_back(inapplicable("independence", "lower", "MOF_k",
                                  "order above " + std::to_string(lim.max_independence_order), anchor_alpha));
  } else {
    alpha = independence_number(g).value;
    report.push_back(entry("independence", "lower", "MOF_k", alpha, true, "any graph", anchor_alpha));
  }
  const std::string anchor_alpha_eq = "MOF_k(G) = alpha(G) for k >= Delta";
  if (alpha < 0) {
    report.push_back(inapplicable("independence_large_k", "upper", "MOF_k", "alpha unavailable", anchor_alpha_eq));
  } else if (k < dmax) {
    report.push_back(inapplicable("independence_large_k", "upper", "MOF_k", "requires k >= Delta", anchor_alpha_eq));
  } else {
    report.push_back(entry("independence_large_k", "upper", "MOF_k", alpha, true, "k >= Delta", anchor_alpha_eq));
  }

  // MOF (k = 1) lower bounds. floor((d+1)/4) with d = 2m/n is floor((2m + n) / 4n).
  const std::string anchor_avg = "MOF(G) >= floor((d + 1) / 4)";
  if (dmin < 2) {
    report.push_back(inapplicable("average_degree", "lower", "MOF", "requires delta >= 2", anchor_avg));
  } else {
    report.push_back(entry("average_degree", "lower", "MOF", Rational(2 * m + n, 4 * n).floor(), true,
                           "delta >= 2", anchor_avg));
  }
  report.push_back(entry("sqrt_order", "lower", "MOF", isqrt(n) / 2, true, "any graph", "MOF(G) >= floor(sqrt(n) / 2)"));

  // MOF upper bounds.
  const std::string anchor_n1 = "MOF(G) <= n - 1";
  if (m == 0) {
    report.push_back(inapplicable("order_minus_one", "upper", "MOF", "requires at least one edge", anchor_n1));
  } else {
    report.push_back(entry("order_minus_one", "upper", "MOF", n - 1, true, "at least one edge", anchor_n1));
  }

  const std::string anchor_tree = "MOF(T) = alpha(T)";
  const bool tree = connected && m == n - 1;
  if (!tree) {
    report.push_back(inapplicable("tree_independence", "upper", "MOF", "not a tree", anchor_tree));
  } else if (alpha < 0) {
    report.push_back(inapplicable("tree_independence", "upper", "MOF", "alpha unavailable", anchor_tree));
  } else {
    report.push_back(entry("tree_independence", "upper", "MOF", alpha, true, "tree", anchor_tree));
  }

  const std::string anchor_mim = "MOF(G) <= n - mim(G)";
  if (n > lim.max_induced_matching_order) {
    report.push_back(inapplicable("induced_matching", "upper", "MOF",
                                  "order above " + std::to_string(lim.max_induced_matching_order), anchor_mim));
  } else {
    report.push_back(entry("induced_matching", "upper", "MOF", n - induced_matching_number(g).value, true,
                           "any graph", anchor_mim));
  }

  // log2(omega) is rounded down, which only weakens the bound.
  const std::string anchor_clique = "MOF(G) <= n - log2(omega(G)) / 2";
  if (n > lim.max_independence_order) {
    report.push_back(inapplicable("clique", "upper", "MOF", "order above " + std::to_string(lim.max_independence_order),
                                  anchor_clique));
  } else {
    const auto omega = static_cast<std::uint64_t>(clique_number(g).value);
    const auto log_floor = static_cast<std::int64_t>(std::bit_width(omega)) - 1;
    report.push_back(entry("clique", "upper", "MOF", Rational(2 * static_cast<std::int64_t>(n) - log_floor, 2), true,
                           "any graph; log2(omega) rounded down to " + std::to_string(log_floor), anchor_clique));
  }

  const std::string anchor_ind = "MOF(G) <= MOF(H) + n - |H|";
  const int cap = std::min(options.induced_subgraph_cap, n - 1);
  if (cap < 1) {
    report.push_back(inapplicable("induced_subgraph", "upper", "MOF", "no proper induced subgraph", anchor_ind));
  } else if (n > 20) {
    report.push_back(inapplicable("induced_subgraph", "upper", "MOF", "order above 20", anchor_ind));
  } else {
    std::int64_t best = n;
    std::uint32_t best_mask = 0;
    bool skipped = false;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const int size = std::popcount(mask);
      if (size > cap) continue;
      const auto h = induced_subgraph(g, VertexSet::from_mask(n, mask));
      if (h.graph.size() > options.max_exact_edges) {
        skipped = true;
        continue;
      }
      const std::int64_t value = max_oriented_forcing_number(h.graph, 1, exact).value + n - size;
      if (value < best) {
        best = value;
        best_mask = mask;
      }
    }
    std::string reason = "best H = " + VertexSet::from_mask(n, best_mask).to_string() + " over |H| <= " +
                         std::to_string(cap);
    if (skipped) reason += "; subgraphs above " + std::to_string(options.max_exact_edges) + " edges skipped";
    report.push_back(entry("induced_subgraph", "upper", "MOF", best, true, reason, anchor_ind));
  }

  const std::string anchor_bridge = "MOF_k(G) <= MOF_k(G1) + MOF_k(G2) across a bridge";
  const auto br = bridges(g);
  if (br.empty()) {
    report.push_back(inapplicable("bridge_split", "upper", "MOF_k", "no bridge", anchor_bridge));
  } else {
    std::int64_t best = -1;
    std::string best_reason;
    bool skipped = false;
    for (const Edge& e : br) {
      std::vector<Edge> rest;
      for (const Edge& f : g.edges()) {
        if (f != e) rest.push_back(f);
      }
      const Graph cut(n, rest);
      const auto comp = connected_components(cut);
      VertexSet side(n);
      for (int v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] == comp[static_cast<std::size_t>(e.u)]) side.insert(v);
      }
      const auto g1 = induced_subgraph(g, side);
      const auto g2 = induced_subgraph(g, VertexSet::full(n) - side);
      if (g1.graph.size() > options.max_exact_edges || g2.graph.size() > options.max_exact_edges) {
        skipped = true;
        continue;
      }
      const std::int64_t value = max_oriented_forcing_number(g1.graph, k, exact).value +
                                 max_oriented_forcing_number(g2.graph, k, exact).value;
      if (best < 0 || value < best) {
        best = value;
        best_reason = "bridge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
      }
    }
    if (best < 0) {
      report.push_back(inapplicable("bridge_split", "upper", "MOF_k",
                                    "every split has a side above " + std::to_string(options.max_exact_edges) + " edges",
                                    anchor_bridge));
    } else {
      if (skipped) best_reason += "; larger splits skipped";
      report.push_back(entry("bridge_split", "upper", "MOF_k", best, true, best_reason, anchor_bridge));
    }
  }
  return report;
}

VertexSet dense_subgraph(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw Inapplicable("dense subgraph of the empty graph");
  const std::int64_t m = g.size();
  VertexSet alive = VertexSet::full(n);
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  // Delete while deg < d/2 = m/n, i.e. deg * n < m.
  for (;;) {
    int pick = -1;
    alive.for_each([&](int v) {
      if (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]) pick = v;
    });
    if (pick < 0 || static_cast<std::int64_t>(deg[static_cast<std::size_t>(pick)]) * n >= m) break;
    alive.erase(pick);
    for (int w : g.neighbors(pick)) {
      if (alive.contains(w)) --deg[static_cast<std::size_t>(w)];
    }
  }
  return alive;
}

}  // namespace okf
