#include "okforce/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>

#include "okforce/detail/kernel.hpp"
#include "okforce/errors.hpp"

namespace okf {

namespace {

using detail::bit;
using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= bit(e.v);
    adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  return adj;
}

Mask lowest(Mask m) { return m & (~m + 1); }

std::vector<int> mask_members(Mask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

struct MisSearch {
  const std::vector<Mask>& adj;
  int best = 0;
  Mask best_set = 0;

  // Include-lowest-first order visits independent sets lexicographically, so the
  // first maximum found is the lexicographically least one.
  void run(Mask cur, int size, Mask cand) {
    if (cand == 0) {
      if (size > best) {
        best = size;
        best_set = cur;
      }
      return;
    }
    if (size + std::popcount(cand) <= best) return;
    const int v = std::countr_zero(cand);
    const Mask nv = adj[static_cast<std::size_t>(v)];
    run(cur | bit(v), size + 1, cand & ~nv & ~bit(v));
    if ((nv & cand) != 0) run(cur, size, cand & ~bit(v));
  }
};

// Minimum number of feasible blocks partitioning the vertex set; blocks returned in
// order of their smallest vertex.
std::pair<int, std::vector<Mask>> min_partition(int n, const std::vector<char>& feasible) {
  const Mask full = detail::low_mask(n);
  constexpr int inf = 1 << 20;
  std::vector<int> best(static_cast<std::size_t>(full) + 1, inf);
  std::vector<Mask> choice(static_cast<std::size_t>(full) + 1, 0);
  best[0] = 0;
  for (Mask w = 1; w <= full; ++w) {
    const Mask low = lowest(w);
    const Mask rest = w & ~low;
    for (Mask s = rest;; s = (s - 1) & rest) {
      const Mask b = low | s;
      if (feasible[b] && best[w & ~b] + 1 < best[w]) {
        best[w] = best[w & ~b] + 1;
        choice[w] = b;
      }
      if (s == 0) break;
    }
  }
  std::vector<Mask> blocks;
  for (Mask w = full; w != 0; w &= ~choice[w]) blocks.push_back(choice[w]);
  return {best[full], blocks};
}

// cmin[S*n + v]: fewest children the root v can have in an out-tree spanning S whose
// other vertices have at most child_cap children, using arcs allowed by `succ`.
std::vector<std::uint8_t> min_root_children(int n, const std::vector<Mask>& succ, int child_cap) {
  constexpr std::uint8_t inf = 255;
  const Mask full = detail::low_mask(n);
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::uint8_t> cmin((static_cast<std::size_t>(full) + 1) * un, inf);
  std::vector<Mask> good(static_cast<std::size_t>(full) + 1, 0);
  for (Mask s = 1; s <= full; ++s) {
    for (Mask it = s; it != 0; it &= it - 1) {
      const int v = std::countr_zero(it);
      std::uint8_t cur = inf;
      if (s == bit(v)) {
        cur = 0;
      } else {
        const Mask rest = s & ~bit(v);
        const Mask low = lowest(rest);
        const Mask free = rest & ~low;
        for (Mask t = free;; t = (t - 1) & free) {
          const Mask sub = low | t;
          if ((good[sub] & succ[static_cast<std::size_t>(v)]) != 0) {
            const std::uint8_t c = cmin[(s & ~sub) * un + static_cast<std::size_t>(v)];
            if (c != inf && c + 1 < cur) cur = static_cast<std::uint8_t>(c + 1);
          }
          if (t == 0) break;
        }
      }
      cmin[s * un + static_cast<std::size_t>(v)] = cur;
      if (cur <= child_cap) good[s] |= bit(v);
    }
  }
  return cmin;
}

// Recovers the arcs of an out-tree on S rooted at v realizing cmin.
void rebuild_tree(int n, const std::vector<Mask>& succ, int child_cap, const std::vector<std::uint8_t>& cmin, Mask s,
                  int v, std::vector<Arc>& arcs) {
  const auto un = static_cast<std::size_t>(n);
  if (s == bit(v)) return;
  const std::uint8_t target = cmin[s * un + static_cast<std::size_t>(v)];
  const Mask rest = s & ~bit(v);
  const Mask low = lowest(rest);
  const Mask free = rest & ~low;
  for (Mask t = free;; t = (t - 1) & free) {
    const Mask sub = low | t;
    if (cmin[(s & ~sub) * un + static_cast<std::size_t>(v)] + 1 == target) {
      for (Mask it = sub & succ[static_cast<std::size_t>(v)]; it != 0; it &= it - 1) {
        const int u = std::countr_zero(it);
        if (cmin[sub * un + static_cast<std::size_t>(u)] <= child_cap) {
          arcs.push_back({v, u});
          rebuild_tree(n, succ, child_cap, cmin, sub, u, arcs);
          rebuild_tree(n, succ, child_cap, cmin, s & ~sub, v, arcs);
          return;
        }
      }
    }
    if (t == 0) break;
  }
  throw PreconditionError("internal error: tree reconstruction failed");
}

CoverPart make_part(Mask block, int root, std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  return {mask_members(block), std::move(arcs), root};
}

}  // namespace

InvariantValue independence_number(const Graph& g, const InvariantLimits& limits) {
  require_limit(g.order(), std::min(limits.max_independence_order, 64), "order for independence number");
  const auto adj = adjacency_masks(g);
  MisSearch search{adj};
  search.run(0, 0, detail::low_mask(g.order()));
  InvariantValue r{"alpha", search.best, VertexSet::from_mask(g.order(), search.best_set), {}, {}};
  return r;
}

InvariantValue clique_number(const Graph& g, const InvariantLimits& limits) {
  auto r = independence_number(complement(g), limits);
  r.name = "clique";
  return r;
}

InvariantValue matching_number(const Graph& g, const InvariantLimits& limits) {
  const int n = g.order();
  require_limit(n, std::min(limits.max_matching_order, 30), "order for matching number");
  const auto adj = adjacency_masks(g);
  std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
  std::function<int(Mask)> f = [&](Mask m) -> int {
    if (m == 0) return 0;
    auto& slot = memo[static_cast<std::size_t>(m)];
    if (slot >= 0) return slot;
    const int v = std::countr_zero(m);
    int best = f(m & ~bit(v));
    for (Mask it = adj[static_cast<std::size_t>(v)] & m; it != 0; it &= it - 1) {
      const int u = std::countr_zero(it);
      best = std::max(best, 1 + f(m & ~bit(v) & ~bit(u)));
    }
    slot = static_cast<std::int8_t>(best);
    return best;
  };
  InvariantValue r{"matching", f(detail::low_mask(n)), {}, {}, {}};
  for (Mask m = detail::low_mask(n); m != 0;) {
    const int v = std::countr_zero(m);
    const int here = f(m);
    if (f(m & ~bit(v)) == here) {
      m &= ~bit(v);
      continue;
    }
    for (Mask it = adj[static_cast<std::size_t>(v)] & m; it != 0; it &= it - 1) {
      const int u = std::countr_zero(it);
      if (1 + f(m & ~bit(v) & ~bit(u)) == here) {
        r.matching.push_back({v, u});
        m &= ~bit(v) & ~bit(u);
        break;
      }
    }
  }
  return r;
}

InvariantValue induced_matching_number(const Graph& g, const InvariantLimits& limits) {
  const int n = g.order();
  require_limit(n, std::min(limits.max_induced_matching_order, 24), "order for induced matching number");
  const auto adj = adjacency_masks(g);
  std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
  // f(a): largest induced matching whose endpoints all lie in the available set a.
  std::function<int(Mask)> f = [&](Mask a) -> int {
    Mask cand = 0;
    for (Mask it = a; it != 0; it &= it - 1) {
      const int v = std::countr_zero(it);
      if ((adj[static_cast<std::size_t>(v)] & a) != 0) {
        cand = bit(v);
        break;
      }
    }
    if (cand == 0) return 0;
    auto& slot = memo[static_cast<std::size_t>(a)];
    if (slot >= 0) return slot;
    const int v = std::countr_zero(cand);
    int best = f(a & ~bit(v));
    for (Mask it = adj[static_cast<std::size_t>(v)] & a; it != 0; it &= it - 1) {
      const int u = std::countr_zero(it);
      const Mask blocked = adj[static_cast<std::size_t>(v)] | adj[static_cast<std::size_t>(u)] | bit(v) | bit(u);
      best = std::max(best, 1 + f(a & ~blocked));
    }
    slot = static_cast<std::int8_t>(best);
    return best;
  };
  InvariantValue r{"induced_matching", f(detail::low_mask(n)), {}, {}, {}};
  Mask a = detail::low_mask(n);
  for (int here = f(a); here > 0; here = f(a)) {
    int v = -1;
    for (Mask it = a; it != 0; it &= it - 1) {
      const int w = std::countr_zero(it);
      if ((adj[static_cast<std::size_t>(w)] & a) != 0) {
        v = w;
        break;
      }
    }
    if (f(a & ~bit(v)) == here) {
      a &= ~bit(v);
      continue;
    }
    for (Mask it = adj[static_cast<std::size_t>(v)] & a; it != 0; it &= it - 1) {
      const int u = std::countr_zero(it);
      const Mask blocked = adj[static_cast<std::size_t>(v)] | adj[static_cast<std::size_t>(u)] | bit(v) | bit(u);
      if (1 + f(a & ~blocked) == here) {
        r.matching.push_back({std::min(u, v), std::max(u, v)});
        a &= ~blocked;
        break;
      }
    }
  }
  std::sort(r.matching.begin(), r.matching.end());
  return r;
}

InvariantValue path_cover_number(const Graph& g, const InvariantLimits& limits) {
  const int n = g.order();
  require_limit(n, std::min(limits.max_path_cover_order, 24), "order for path cover number");
  InvariantValue r{"rho", 0, {}, {}, {}};
  if (n == 0) return r;
  const auto adj = adjacency_masks(g);
  const Mask full = detail::low_mask(n);
  // ends[S]: vertices at which some Hamiltonian path of G[S] ends.
  std::vector<Mask> ends(static_cast<std::size_t>(full) + 1, 0);
  std::vector<char> feasible(static_cast<std::size_t>(full) + 1, 0);
  for (Mask s = 1; s <= full; ++s) {
    if (std::has_single_bit(s)) {
      ends[s] = s;
    } else {
      for (Mask it = s; it != 0; it &= it - 1) {
        const int v = std::countr_zero(it);
        if ((adj[static_cast<std::size_t>(v)] & ends[s & ~bit(v)]) != 0) ends[s] |= bit(v);
      }
    }
    feasible[s] = ends[s] != 0 ? 1 : 0;
  }
  auto [value, blocks] = min_partition(n, feasible);
  r.value = value;
  for (const Mask b : blocks) {
    std::vector<int> order;
    Mask s = b;
    int v = std::countr_zero(ends[s]);
    for (;;) {
      order.push_back(v);
      s &= ~bit(v);
      if (s == 0) break;
      v = std::countr_zero(adj[static_cast<std::size_t>(v)] & ends[s]);
    }
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) arcs.push_back({order[i], order[i + 1]});
    r.cover.push_back(make_part(b, order.front(), std::move(arcs)));
  }
  return r;
}

InvariantValue tree_cover_number(const Graph& g, int k, const InvariantLimits& limits) {
  if (k <= 0) throw ParameterError("k must be a positive integer");
  const int n = g.order();
  require_limit(n, std::min(limits.max_tree_cover_order, 20), "order for tree cover number");
  InvariantValue r{"tree_cover_" + std::to_string(k), 0, {}, {}, {}};
  if (n == 0) return r;
  const auto adj = adjacency_masks(g);
  // A tree of maximum degree <= k+1 rooted at a leaf: the root has one child, the rest at most k.
  const int cap = std::min(k, 64);
  const auto cmin = min_root_children(n, adj, cap);
  const auto un = static_cast<std::size_t>(n);
  const Mask full = detail::low_mask(n);
  std::vector<char> feasible(static_cast<std::size_t>(full) + 1, 0);
  for (Mask s = 1; s <= full; ++s) {
    for (Mask it = s; it != 0 && !feasible[s]; it &= it - 1) {
      if (cmin[s * un + static_cast<std::size_t>(std::countr_zero(it))] <= 1) feasible[s] = 1;
    }
  }
  auto [value, blocks] = min_partition(n, feasible);
  r.value = value;
  for (const Mask b : blocks) {
    int root = 0;
    for (Mask it = b; it != 0; it &= it - 1) {
      root = std::countr_zero(it);
      if (cmin[b * un + static_cast<std::size_t>(root)] <= 1) break;
    }
    std::vector<Arc> arcs;
    rebuild_tree(n, adj, cap, cmin, b, root, arcs);
    r.cover.push_back(make_part(b, root, std::move(arcs)));
  }
  return r;
}

InvariantValue induced_kary_cover_number(const OrientedGraph& d, int k, bool strict_induced,
                                         const InvariantLimits& limits) {
  if (k <= 0) throw ParameterError("k must be a positive integer");
  const int n = d.order();
  require_limit(n, std::min(limits.max_kary_cover_order, 20), "order for induced k-ary tree cover number");
  InvariantValue r{strict_induced ? "induced_kary_strict_" + std::to_string(k) : "induced_kary_" + std::to_string(k),
                   0, {}, {}, {}};
  if (n == 0) return r;
  const auto g = detail::BitDigraph::from(d);
  std::vector<Mask> succ(g.out.begin(), g.out.begin() + n);
  const int cap = std::min(k, 64);
  const auto un = static_cast<std::size_t>(n);
  const Mask full = detail::low_mask(n);
  std::vector<char> feasible(static_cast<std::size_t>(full) + 1, 0);
  std::vector<int> roots(static_cast<std::size_t>(full) + 1, -1);
  std::vector<std::uint8_t> cmin;
  if (strict_induced) {
    for (Mask s = 1; s <= full; ++s) {
      int arcs = 0;
      int root = -1;
      int sources = 0;
      bool ok = true;
      for (Mask it = s; it != 0; it &= it - 1) {
        const int v = std::countr_zero(it);
        const int indeg = std::popcount(g.in[v] & s);
        const int outdeg = std::popcount(g.out[v] & s);
        arcs += outdeg;
        if (outdeg > k || indeg > 1) ok = false;
        if (indeg == 0) {
          root = v;
          ++sources;
        }
      }
      if (!ok || sources != 1 || arcs != std::popcount(s) - 1) continue;
      // One source, all other in-degrees 1 and |S|-1 arcs: a tree iff the source reaches S.
      Mask seen = bit(root);
      for (Mask frontier = seen; frontier != 0;) {
        Mask next = 0;
        for (Mask it = frontier; it != 0; it &= it - 1) next |= g.out[std::countr_zero(it)] & s;
        frontier = next & ~seen;
        seen |= next;
      }
      if (seen == s) {
        feasible[s] = 1;
        roots[s] = root;
      }
    }
  } else {
    cmin = min_root_children(n, succ, cap);
    for (Mask s = 1; s <= full; ++s) {
      for (Mask it = s; it != 0; it &= it - 1) {
        const int v = std::countr_zero(it);
        if (cmin[s * un + static_cast<std::size_t>(v)] <= cap) {
          feasible[s] = 1;
          roots[s] = v;
          break;
        }
      }
    }
  }
  auto [value, blocks] = min_partition(n, feasible);
  r.value = value;
  for (const Mask b : blocks) {
    std::vector<Arc> arcs;
    if (strict_induced) {
      for (Mask it = b; it != 0; it &= it - 1) {
        const int v = std::countr_zero(it);
        for (Mask jt = g.out[v] & b; jt != 0; jt &= jt - 1) arcs.push_back({v, std::countr_zero(jt)});
      }
    } else {
      rebuild_tree(n, succ, cap, cmin, b, roots[b], arcs);
    }
    r.cover.push_back(make_part(b, roots[b], std::move(arcs)));
  }
  return r;
}

int min_degree(const Graph& g) { return g.min_degree(); }
int max_degree(const Graph& g) { return g.max_degree(); }

Rational average_degree(const Graph& g) {
  if (g.order() == 0) throw Inapplicable("average degree of the empty graph");
  return {2 * static_cast<std::int64_t>(g.size()), g.order()};
}

std::optional<int> diameter(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::deque<int> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
      }
    }
    for (int x : dist) {
      if (x < 0) return std::nullopt;
      best = std::max(best, x);
    }
  }
  return best;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (const auto& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) return false;
  }
  return true;
}

std::vector<std::string> tree_cover_violations(const Graph& g, const std::vector<CoverPart>& parts, int max_degree) {
  std::vector<std::string> out;
  const int n = g.order();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    const std::string tag = "part " + std::to_string(p);
    for (int v : part.vertices) {
      if (v < 0 || v >= n) {
        out.push_back(tag + ": vertex " + std::to_string(v) + " out of range");
        return out;
      }
      if (owner[static_cast<std::size_t>(v)] >= 0) out.push_back("vertex " + std::to_string(v) + " covered twice");
      owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
    if (part.vertices.empty()) {
      out.push_back(tag + ": empty");
      continue;
    }
    if (owner[static_cast<std::size_t>(std::clamp(part.root, 0, n - 1))] != static_cast<int>(p) || part.root < 0 ||
        part.root >= n) {
      out.push_back(tag + ": root " + std::to_string(part.root) + " is not in the part");
      continue;
    }
    if (part.edges.size() + 1 != part.vertices.size()) {
      out.push_back(tag + ": " + std::to_string(part.edges.size()) + " edges on " +
                    std::to_string(part.vertices.size()) + " vertices");
      continue;
    }
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> kids(static_cast<std::size_t>(n));
    bool ok = true;
    for (const auto& a : part.edges) {
      if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n || owner[static_cast<std::size_t>(a.tail)] != static_cast<int>(p) ||
          owner[static_cast<std::size_t>(a.head)] != static_cast<int>(p)) {
        out.push_back(tag + ": edge leaves the part");
        ok = false;
        break;
      }
      if (!g.adjacent(a.tail, a.head)) {
        out.push_back(tag + ": {" + std::to_string(a.tail) + "," + std::to_string(a.head) + "} is not an edge");
        ok = false;
      }
      ++indeg[static_cast<std::size_t>(a.head)];
      ++deg[static_cast<std::size_t>(a.head)];
      ++deg[static_cast<std::size_t>(a.tail)];
      kids[static_cast<std::size_t>(a.tail)].push_back(a.head);
    }
    if (!ok) continue;
    for (int v : part.vertices) {
      const int want = v == part.root ? 0 : 1;
      if (indeg[static_cast<std::size_t>(v)] != want) {
        out.push_back(tag + ": edges are not directed away from root " + std::to_string(part.root));
        ok = false;
        break;
      }
      if (deg[static_cast<std::size_t>(v)] > max_degree) {
        out.push_back(tag + ": vertex " + std::to_string(v) + " has tree degree above " + std::to_string(max_degree));
        ok = false;
      }
    }
    if (!ok) continue;
    std::vector<int> stack{part.root};
    std::size_t reached = 0;
    while (!stack.empty() && reached <= part.vertices.size()) {
      const int v = stack.back();
      stack.pop_back();
      ++reached;
      for (int w : kids[static_cast<std::size_t>(v)]) stack.push_back(w);
    }
    if (reached != part.vertices.size()) out.push_back(tag + ": not connected from its root");
  }
  for (int v = 0; v < n; ++v) {
    if (owner[static_cast<std::size_t>(v)] < 0) out.push_back("vertex " + std::to_string(v) + " is not covered");
  }
  return out;
}

}  // namespace okf
