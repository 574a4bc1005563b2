#include "okforce/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <thread>

#include "okforce/detail/kernel.hpp"
#include "okforce/errors.hpp"
#include "okforce/forcing.hpp"
#include "okforce/invariants.hpp"

namespace okf {

namespace {

using detail::BitDigraph;
using detail::bit;

void check_k(int k) {
  if (k <= 0) throw ParameterError("k must be a positive integer");
}

struct ScanOutcome {
  bool found = false;
  int value = 0;
  std::uint64_t bits = 0;
  std::uint64_t witness = 0;
  std::uint64_t explored = 0;
};

// Scores the orientations lo..hi-1 of a connected graph in increasing order. Only
// orientations that beat `incumbent` are solved to completion; the rest are rejected
// by cheap bounds or a capped search.
ScanOutcome scan_range(const Graph& c, int k, bool maximize, std::uint64_t lo, std::uint64_t hi, int incumbent,
                       int stop, int chunk, std::atomic<int>& stopped_at) {
  const int m = c.size();
  BitDigraph g = BitDigraph::empty(c.order());
  for (int i = 0; i < m; ++i) {
    const Edge& e = c.edge(i);
    if ((lo >> i) & 1U) {
      g.add_arc(e.u, e.v);
    } else {
      g.add_arc(e.v, e.u);
    }
  }
  std::uint64_t sources = g.sources();
  ScanOutcome out;
  out.value = incumbent;
  std::uint64_t closures = 0;
  for (std::uint64_t x = lo; x < hi; ++x) {
    if (stopped_at.load(std::memory_order_relaxed) < chunk) break;
    ++out.explored;
    const int ns = std::popcount(sources);
    if (maximize) {
      // Supersets of forcing sets force, so F <= incumbent iff some set of exactly
      // incumbent vertices (sources included) forces.
      const bool beaten = ns > out.value || (detail::quick_forcing_upper_bound(g, k, sources) > out.value &&
                                             detail::find_forcing_subset(g, k, g.all, sources, out.value, closures) == 0);
      if (beaten) {
        const auto sol = detail::min_forcing_component(g, k, g.all, closures, out.value + 1);
        out = {true, sol.value, x, sol.witness, out.explored};
      }
    } else {
      int lb = std::max({ns, g.min_out_degree(g.all) - k + 1, 1});
      if (lb < out.value) {
        const auto sol = detail::min_forcing_component(g, k, g.all, closures, 1, out.value - 1);
        if (sol.value < out.value) out = {true, sol.value, x, sol.witness, out.explored};
      }
    }
    if (out.found && (maximize ? out.value >= stop : out.value <= stop)) {
      int cur = stopped_at.load();
      while (chunk < cur && !stopped_at.compare_exchange_weak(cur, chunk)) {
      }
      break;
    }
    const std::uint64_t flips = x ^ (x + 1);
    for (std::uint64_t it = flips; it != 0 && x + 1 < hi; it &= it - 1) {
      const int i = std::countr_zero(it);
      if (i < m) {
        const int u = c.edge(i).u;
        const int v = c.edge(i).v;
        g.flip(u, v);
        sources &= ~(bit(u) | bit(v));
        sources |= (g.in[u] == 0 ? bit(u) : 0) | (g.in[v] == 0 ? bit(v) : 0);
      }
    }
  }
  return out;
}

// Orienting every edge away from a maximum independent set makes that set mandatory,
// so its forcing number is a valid starting point for the maximum.
int orient_away_seed(const Graph& c, int k) {
  const auto alpha = independence_number(c);
  BitDigraph g = BitDigraph::empty(c.order());
  for (const auto& e : c.edges()) {
    if (alpha.witness.contains(e.v)) {
      g.add_arc(e.v, e.u);
    } else {
      g.add_arc(e.u, e.v);
    }
  }
  std::uint64_t closures = 0;
  return detail::min_forcing(g, k, closures).value;
}

ScanOutcome extreme_component(const Graph& c, int k, bool maximize, const ExtremeOptions& options) {
  const int n = c.order();
  const int m = c.size();
  if (m == 0) return {true, 1, 0, 1, 1};
  int stop = maximize ? n - 1 : 1;
  int incumbent = maximize ? 0 : n + 1;
  if (maximize) {
    incumbent = orient_away_seed(c, k) - 1;
  } else if (options.tree_cover_exit && n <= InvariantLimits{}.max_tree_cover_order) {
    stop = static_cast<int>(tree_cover_number(c, k).value);
  }
  const bool dedup = k == 1 && options.reversal_dedup;
  const std::uint64_t total = std::uint64_t{1} << (dedup ? m - 1 : m);
  const int threads = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(options.threads, 1)), 1, total));
  std::vector<ScanOutcome> parts(static_cast<std::size_t>(threads));
  std::atomic<int> stopped_at{INT_MAX};
  auto run = [&](int t) {
    const std::uint64_t lo = total / static_cast<std::uint64_t>(threads) * static_cast<std::uint64_t>(t);
    const std::uint64_t hi = t + 1 == threads ? total : total / static_cast<std::uint64_t>(threads) * static_cast<std::uint64_t>(t + 1);
    parts[static_cast<std::size_t>(t)] = scan_range(c, k, maximize, lo, hi, incumbent, stop, t, stopped_at);
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }
  ScanOutcome best;
  for (const auto& p : parts) {
    best.explored += p.explored;
    if (!p.found) continue;
    if (!best.found || (maximize ? p.value > best.value : p.value < best.value)) {
      const auto explored = best.explored;
      best = p;
      best.explored = explored;
    }
  }
  if (!best.found) throw PreconditionError("internal error: orientation scan found no witness");
  return best;
}

OrientationResult extreme(const Graph& g, int k, bool maximize, const ExtremeOptions& options) {
  check_k(k);
  require_limit(g.size(), options.limits.max_orientation_edges, "edge count for orientation enumeration");
  const int n = g.order();
  OrientationResult result;
  std::vector<bool> direction(static_cast<std::size_t>(g.size()), false);
  result.witness = VertexSet(n);
  const auto comp = connected_components(g);
  const int comps = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  for (int ci = 0; ci < comps; ++ci) {
    Induced<Graph> sub;
    if (comps == 1) {
      sub.original.resize(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) sub.original[static_cast<std::size_t>(v)] = v;
    } else {
      VertexSet members(n);
      for (int v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] == ci) members.insert(v);
      }
      sub = induced_subgraph(g, members);
    }
    const Graph& cg = comps == 1 ? g : sub.graph;
    require_limit(cg.order(), std::min(options.limits.max_subset_order, 64), "component order for exact F_k");
    const auto part = extreme_component(cg, k, maximize, options);
    result.value += part.value;
    result.explored += part.explored;
    for (int i = 0; i < cg.size(); ++i) {
      const Edge& e = cg.edge(i);
      const int gi = comps == 1 ? i
                                : *g.edge_index(sub.original[static_cast<std::size_t>(e.u)],
                                                sub.original[static_cast<std::size_t>(e.v)]);
      direction[static_cast<std::size_t>(gi)] = ((part.bits >> i) & 1U) != 0;
    }
    for (std::uint64_t it = part.witness; it != 0; it &= it - 1) {
      result.witness.insert(sub.original[static_cast<std::size_t>(std::countr_zero(it))]);
    }
  }
  result.orientation = orient(g, std::move(direction));
  return result;
}

}  // namespace

ForcingResult min_forcing_number(const OrientedGraph& d, int k, const SolveLimits& limits) {
  check_k(k);
  const int n = d.order();
  if (n < 1) throw ParameterError("F_k needs at least one vertex");
  require_limit(n, std::min(limits.max_subset_order, 64), "order for exact F_k");
  std::uint64_t closures = 0;
  const auto sol = detail::min_forcing(BitDigraph::from(d), k, closures);
  return {sol.value, VertexSet::from_mask(n, sol.witness), closures, false};
}

ForcingResult forcing_number_brute(const OrientedGraph& d, int k, const SolveLimits& limits) {
  check_k(k);
  const int n = d.order();
  if (n < 1) throw ParameterError("F_k needs at least one vertex");
  require_limit(n, std::min(limits.max_subset_order, 24), "order for brute-force F_k");
  ForcingResult r;
  for (int size = 1; size <= n; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      const auto s = VertexSet::from_list(n, idx);
      ++r.explored;
      if (is_forcing_set(d, s, k)) {
        r.value = size;
        r.witness = s;
        return r;
      }
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  throw PreconditionError("internal error: V is always a forcing set");
}

OrientationResult min_oriented_forcing_number(const Graph& g, int k, const ExtremeOptions& options) {
  return extreme(g, k, false, options);
}

OrientationResult max_oriented_forcing_number(const Graph& g, int k, const ExtremeOptions& options) {
  return extreme(g, k, true, options);
}

}  // namespace okf
