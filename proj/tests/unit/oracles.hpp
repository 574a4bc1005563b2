// Slow reference implementations used as test oracles. They work from raw arc and edge
// lists and share no code with the library beyond the graph containers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "okforce/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline std::vector<std::vector<int>> out_lists(const okf::OrientedGraph& d) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(d.order()));
  for (const auto& a : d.arcs()) out[static_cast<std::size_t>(a.tail)].push_back(a.head);
  return out;
}

// Applies the colour change rule one round at a time until nothing changes.
inline Mask closure(const okf::OrientedGraph& d, Mask s, int k) {
  const auto out = out_lists(d);
  for (;;) {
    Mask next = s;
    for (int u = 0; u < d.order(); ++u) {
      if (!(s >> u & 1U)) continue;
      int white = 0;
      for (int w : out[static_cast<std::size_t>(u)]) white += (s >> w & 1U) ? 0 : 1;
      if (white >= 1 && white <= k) {
        for (int w : out[static_cast<std::size_t>(u)]) next |= Mask{1} << w;
      }
    }
    if (next == s) return s;
    s = next;
  }
}

inline Mask full(int n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline int forcing_number(const okf::OrientedGraph& d, int k) {
  const int n = d.order();
  int best = n;
  for (Mask s = 0; s <= full(n); ++s) {
    const int c = __builtin_popcount(s);
    if (c < best && closure(d, s, k) == full(n)) best = c;
    if (s == full(n)) break;
  }
  return best;
}

inline bool adjacent(const okf::Graph& g, int u, int v) {
  for (const auto& e : g.edges()) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
  }
  return false;
}

inline int independence_number(const okf::Graph& g) {
  const int n = g.order();
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool ok = true;
    for (const auto& e : g.edges()) ok = ok && !((s >> e.u & 1U) && (s >> e.v & 1U));
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

// Extremes of F_k over every orientation, by direct enumeration.
inline std::pair<int, int> orientation_extremes(const okf::Graph& g, int k) {
  int lo = g.order() + 1;
  int hi = -1;
  const std::uint64_t total = std::uint64_t{1} << g.size();
  for (std::uint64_t b = 0; b < total; ++b) {
    const int f = forcing_number(okf::orient(g, b), k);
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  return {lo, hi};
}

inline bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> comp(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) comp[static_cast<std::size_t>(i)] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [u, v] : edges) {
      const int a = std::min(comp[static_cast<std::size_t>(u)], comp[static_cast<std::size_t>(v)]);
      for (int x : {u, v}) {
        if (comp[static_cast<std::size_t>(x)] != a) {
          comp[static_cast<std::size_t>(x)] = a;
          changed = true;
        }
      }
    }
  }
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

}  // namespace oracle

namespace oracle {

// n minus the most edges of a forest whose vertices all have degree <= max_degree: the
// fewest vertex-disjoint trees of that degree bound covering the graph.
inline int bounded_forest_cover(const okf::Graph& g, int max_degree) {
  const int n = g.order();
  const int m = g.size();
  int best = 0;
  for (std::uint32_t sub = 0; sub < (1U << m); ++sub) {
    const int c = __builtin_popcount(sub);
    if (c <= best) continue;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<int> comp(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) comp[static_cast<std::size_t>(i)] = i;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(sub >> i & 1U)) continue;
      const auto e = g.edge(i);
      ok = ++deg[static_cast<std::size_t>(e.u)] <= max_degree && ++deg[static_cast<std::size_t>(e.v)] <= max_degree;
      const int a = comp[static_cast<std::size_t>(e.u)];
      const int b = comp[static_cast<std::size_t>(e.v)];
      if (a == b) ok = false;
      for (auto& x : comp) {
        if (x == b) x = a;
      }
    }
    if (ok) best = c;
  }
  return n - best;
}

// n minus the most arcs of a branching (in-degree <= 1, acyclic) with at most k children per vertex.
inline int branching_cover(const okf::OrientedGraph& d, int k) {
  const int n = d.order();
  const auto arcs = d.arcs();
  const int m = static_cast<int>(arcs.size());
  int best = 0;
  for (std::uint32_t sub = 0; sub < (1U << m); ++sub) {
    const int c = __builtin_popcount(sub);
    if (c <= best) continue;
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::vector<int> kids(static_cast<std::size_t>(n), 0);
    std::vector<int> comp(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) comp[static_cast<std::size_t>(i)] = i;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(sub >> i & 1U)) continue;
      const auto a = arcs[static_cast<std::size_t>(i)];
      ok = ++indeg[static_cast<std::size_t>(a.head)] <= 1 && ++kids[static_cast<std::size_t>(a.tail)] <= k;
      const int x = comp[static_cast<std::size_t>(a.tail)];
      const int y = comp[static_cast<std::size_t>(a.head)];
      if (x == y) ok = false;
      for (auto& z : comp) {
        if (z == y) z = x;
      }
    }
    if (ok) best = c;
  }
  return n - best;
}

// Largest edge subset that is a matching; induced additionally forbids any edge joining two of its edges.
inline int matching(const okf::Graph& g, bool induced) {
  const int m = g.size();
  int best = 0;
  for (std::uint32_t sub = 0; sub < (1U << m); ++sub) {
    const int c = __builtin_popcount(sub);
    if (c <= best) continue;
    Mask used = 0;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(sub >> i & 1U)) continue;
      const auto e = g.edge(i);
      if ((used >> e.u & 1U) || (used >> e.v & 1U)) ok = false;
      used |= (Mask{1} << e.u) | (Mask{1} << e.v);
    }
    if (ok && induced) {
      int inside = 0;
      for (const auto& e : g.edges()) inside += ((used >> e.u & 1U) && (used >> e.v & 1U)) ? 1 : 0;
      ok = inside == c;
    }
    if (ok) best = c;
  }
  return best;
}

inline int clique_number(const okf::Graph& g) {
  const int n = g.order();
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    const int c = __builtin_popcount(s);
    if (c <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) {
        if ((s >> u & 1U) && (s >> v & 1U)) ok = adjacent(g, u, v);
      }
    }
    if (ok) best = c;
  }
  return best;
}

}  // namespace oracle
