#include "okforce/constructions.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "okforce/errors.hpp"
#include "okforce/forcing.hpp"

namespace okf {

OrientedGraph balanced_orientation(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  // Augmented edge list: original edges keep their indices, auxiliary edges follow.
  std::vector<Edge> edges = g.edges();
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) % 2 == 1) edges.push_back({v, n});
  }
  const auto total = edges.size();
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < total; ++i) {
    incident[static_cast<std::size_t>(edges[i].u)].push_back(static_cast<int>(i));
    incident[static_cast<std::size_t>(edges[i].v)].push_back(static_cast<int>(i));
  }
  std::vector<char> used(total, 0);
  std::vector<std::size_t> next(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> direction(static_cast<std::size_t>(m), false);
  for (int start = 0; start <= n; ++start) {
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int x = stack.back();
      auto& pos = next[static_cast<std::size_t>(x)];
      const auto& inc = incident[static_cast<std::size_t>(x)];
      while (pos < inc.size() && used[static_cast<std::size_t>(inc[pos])]) ++pos;
      if (pos == inc.size()) {
        stack.pop_back();
        continue;
      }
      const int e = inc[pos];
      used[static_cast<std::size_t>(e)] = 1;
      const Edge& ed = edges[static_cast<std::size_t>(e)];
      const int y = ed.u == x ? ed.v : ed.u;
      if (e < m) direction[static_cast<std::size_t>(e)] = ed.u == x;
      stack.push_back(y);
    }
  }
  return orient(g, std::move(direction));
}

OrientedGraph orient_away_from(const Graph& g, const VertexSet& i) {
  if (i.universe() != g.order()) throw ParameterError("vertex set universe does not match the graph");
  std::vector<bool> direction(static_cast<std::size_t>(g.size()));
  for (int e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (i.contains(ed.u) && i.contains(ed.v)) {
      throw PreconditionError("set " + i.to_string() + " is not independent: edge {" + std::to_string(ed.u) + "," +
                              std::to_string(ed.v) + "}");
    }
    direction[static_cast<std::size_t>(e)] = !i.contains(ed.v);
  }
  return orient(g, std::move(direction));
}

OrientedGraph max_degree_out_orientation(const Graph& g) {
  int hub = 0;
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) > g.degree(hub)) hub = v;
  }
  std::vector<bool> direction(static_cast<std::size_t>(g.size()));
  for (int e = 0; e < g.size(); ++e) direction[static_cast<std::size_t>(e)] = g.edge(e).v != hub;
  return orient(g, std::move(direction));
}

TreeCoverOrientation tree_cover_orientation(const Graph& g, const std::vector<CoverPart>& cover, int k) {
  if (k <= 0) throw ParameterError("k must be a positive integer");
  const int n = g.order();
  // Re-derive each part's arcs away from its root so callers may list edges either way.
  std::vector<CoverPart> parts;
  std::vector<int> level(static_cast<std::size_t>(n), -1);
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t p = 0; p < cover.size(); ++p) {
    const auto& part = cover[p];
    CoverPart norm{part.vertices, {}, part.root};
    std::sort(norm.vertices.begin(), norm.vertices.end());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& a : part.edges) {
      if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
        throw PreconditionError("part " + std::to_string(p) + ": edge endpoint out of range");
      }
      adj[static_cast<std::size_t>(a.tail)].push_back(a.head);
      adj[static_cast<std::size_t>(a.head)].push_back(a.tail);
    }
    if (part.root >= 0 && part.root < n) {
      if (static_cast<int>(adj[static_cast<std::size_t>(part.root)].size()) > k) {
        throw PreconditionError("part " + std::to_string(p) + ": root " + std::to_string(part.root) + " has more than k = " +
                                std::to_string(k) + " tree neighbours");
      }
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      std::deque<int> queue{part.root};
      seen[static_cast<std::size_t>(part.root)] = 1;
      level[static_cast<std::size_t>(part.root)] = 0;
      while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
        auto nb = adj[static_cast<std::size_t>(v)];
        std::sort(nb.begin(), nb.end());
        for (int w : nb) {
          if (seen[static_cast<std::size_t>(w)]) continue;
          seen[static_cast<std::size_t>(w)] = 1;
          level[static_cast<std::size_t>(w)] = level[static_cast<std::size_t>(v)] + 1;
          norm.edges.push_back({v, w});
          queue.push_back(w);
        }
      }
      // Edges that closed a cycle are kept so validation reports them.
      if (norm.edges.size() < part.edges.size()) norm.edges = part.edges;
    }
    parts.push_back(std::move(norm));
  }
  const auto problems = tree_cover_violations(g, parts, k + 1);
  if (!problems.empty()) throw PreconditionError("invalid (k+1)-tree cover: " + problems.front());

  std::vector<bool> direction(static_cast<std::size_t>(g.size()));
  for (const auto& part : parts) {
    for (const auto& a : part.edges) {
      const int e = *g.edge_index(a.tail, a.head);
      direction[static_cast<std::size_t>(e)] = a.tail < a.head;
    }
  }
  std::vector<char> tree_edge(static_cast<std::size_t>(g.size()), 0);
  for (const auto& part : parts) {
    for (const auto& a : part.edges) tree_edge[static_cast<std::size_t>(*g.edge_index(a.tail, a.head))] = 1;
  }
  for (int e = 0; e < g.size(); ++e) {
    if (tree_edge[static_cast<std::size_t>(e)]) continue;
    const int u = g.edge(e).u;
    const int v = g.edge(e).v;
    const int lu = level[static_cast<std::size_t>(u)];
    const int lv = level[static_cast<std::size_t>(v)];
    bool u_receives;
    if (lu != lv) {
      u_receives = lu < lv;
    } else if (owner[static_cast<std::size_t>(u)] != owner[static_cast<std::size_t>(v)]) {
      u_receives = owner[static_cast<std::size_t>(u)] < owner[static_cast<std::size_t>(v)];
    } else {
      u_receives = true;
    }
    direction[static_cast<std::size_t>(e)] = !u_receives;
  }
  TreeCoverOrientation out{orient(g, std::move(direction)), VertexSet(n), std::move(level)};
  for (const auto& part : parts) out.roots.insert(part.root);
  return out;
}

Condensation condensation(const OrientedGraph& d) {
  const int n = d.order();
  // Tarjan's algorithm, iterative.
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  std::vector<int> raw(static_cast<std::size_t>(n), -1);
  int counter = 0;
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (index[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> frames{{s, 0}};
    index[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = counter++;
    stack.push_back(s);
    on_stack[static_cast<std::size_t>(s)] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto out = d.out_neighbors(v);
      if (pos < out.size()) {
        const int w = out[pos++];
        if (index[static_cast<std::size_t>(w)] < 0) {
          index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      const int vv = v;
      if (low[static_cast<std::size_t>(vv)] == index[static_cast<std::size_t>(vv)]) {
        for (;;) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          raw[static_cast<std::size_t>(w)] = comps;
          if (w == vv) break;
        }
        ++comps;
      }
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().first;
        low[static_cast<std::size_t>(parent)] = std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(vv)]);
      }
    }
  }
  // Renumber by smallest member.
  std::vector<int> rename(static_cast<std::size_t>(comps), -1);
  Condensation c;
  c.component.assign(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    auto& r = rename[static_cast<std::size_t>(raw[static_cast<std::size_t>(v)])];
    if (r < 0) r = next++;
    c.component[static_cast<std::size_t>(v)] = r;
  }
  c.members.assign(static_cast<std::size_t>(comps), {});
  for (int v = 0; v < n; ++v) c.members[static_cast<std::size_t>(c.component[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<char> has_in(static_cast<std::size_t>(comps), 0);
  for (const auto& a : d.arcs()) {
    const int cu = c.component[static_cast<std::size_t>(a.tail)];
    const int cv = c.component[static_cast<std::size_t>(a.head)];
    if (cu != cv) {
      c.arcs.push_back({cu, cv});
      has_in[static_cast<std::size_t>(cv)] = 1;
    }
  }
  std::sort(c.arcs.begin(), c.arcs.end());
  c.arcs.erase(std::unique(c.arcs.begin(), c.arcs.end()), c.arcs.end());
  for (int i = 0; i < comps; ++i) {
    if (!has_in[static_cast<std::size_t>(i)]) c.sources.push_back(i);
  }
  return c;
}

ReachingSetResult min_reaching_set(const OrientedGraph& d) {
  const int n = d.order();
  const auto c = condensation(d);
  ReachingSetResult r{VertexSet(n), {}, std::vector<int>(static_cast<std::size_t>(n), -1)};
  for (int s : c.sources) r.root_list.push_back(c.members[static_cast<std::size_t>(s)].front());
  std::sort(r.root_list.begin(), r.root_list.end());
  for (std::size_t i = 0; i < r.root_list.size(); ++i) {
    r.roots.insert(r.root_list[i]);
    reachable_from(d, r.root_list[i]).for_each([&](int v) {
      if (r.assignment[static_cast<std::size_t>(v)] < 0) r.assignment[static_cast<std::size_t>(v)] = static_cast<int>(i);
    });
  }
  return r;
}

bool is_reachable(const OrientedGraph& d) { return d.order() > 0 && condensation(d).sources.size() == 1; }

bool is_strongly_reachable(const OrientedGraph& d) { return d.order() > 0 && condensation(d).members.size() == 1; }

std::vector<Edge> bridges(const Graph& g) {
  std::vector<Edge> out;
  for (int e = 0; e < g.size(); ++e) {
    std::vector<Edge> rest;
    for (int f = 0; f < g.size(); ++f) {
      if (f != e) rest.push_back(g.edge(f));
    }
    if (component_count(Graph(g.order(), std::move(rest))) > component_count(g)) out.push_back(g.edge(e));
  }
  return out;
}

bool is_two_edge_connected(const Graph& g) { return g.size() > 0 && is_connected(g) && bridges(g).empty(); }

bool is_balanced(const OrientedGraph& d) {
  for (int v = 0; v < d.order(); ++v) {
    if (std::abs(d.out_degree(v) - d.in_degree(v)) > 1) return false;
  }
  return true;
}

}  // namespace okf
