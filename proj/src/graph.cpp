#include "okforce/graph.hpp"

#include <algorithm>
#include <numeric>

#include "okforce/errors.hpp"

namespace okf {

namespace {

// Lists come out sorted: for a canonical edge list every {u,v} with u < v precedes every {v,w}.
std::vector<std::vector<int>> build_adjacency(int n, const std::vector<Edge>& edges) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < adj.size(); ++v) adj[v].reserve(static_cast<std::size_t>(deg[v]));
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw ParameterError("vertex count must be non-negative");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u == e.v) throw ParameterError("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) throw ParameterError("edge endpoints must satisfy u < v");
    if (e.u < 0 || e.v >= n) throw ParameterError("edge endpoint outside 0..n-1");
    if (i > 0 && !(edges_[i - 1] < e)) throw ParameterError("edge list must be strictly increasing");
  }
  adj_ = build_adjacency(n_, edges_);
}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ParameterError("duplicate edge");
  }
  return Graph(n, std::move(edges));
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

OrientedGraph::OrientedGraph(Graph g, std::vector<bool> direction)
    : graph_(std::move(g)), direction_(std::move(direction)) {
  if (static_cast<int>(direction_.size()) != graph_.size()) {
    throw ParameterError("direction vector has length " + std::to_string(direction_.size()) +
                         " but the graph has " + std::to_string(graph_.size()) + " edges");
  }
  const auto n = static_cast<std::size_t>(graph_.order());
  out_.assign(n, {});
  in_.assign(n, {});
  for (std::size_t v = 0; v < n; ++v) {
    out_[v].reserve(static_cast<std::size_t>(graph_.degree(static_cast<int>(v))));
    in_[v].reserve(static_cast<std::size_t>(graph_.degree(static_cast<int>(v))));
  }
  for (int i = 0; i < graph_.size(); ++i) {
    const Arc a = arc(i);
    out_[static_cast<std::size_t>(a.tail)].push_back(a.head);
    in_[static_cast<std::size_t>(a.head)].push_back(a.tail);
  }
  for (auto& l : out_) std::sort(l.begin(), l.end());
  for (auto& l : in_) std::sort(l.begin(), l.end());
}

OrientedGraph OrientedGraph::from_arcs(int n, const std::vector<Arc>& arcs) {
  std::vector<Edge> edges;
  edges.reserve(arcs.size());
  for (const auto& a : arcs) edges.push_back({a.tail, a.head});
  Graph g = Graph::from_edges(n, std::move(edges));
  std::vector<bool> dir(static_cast<std::size_t>(g.size()));
  for (const auto& a : arcs) {
    const int i = *g.edge_index(a.tail, a.head);
    dir[static_cast<std::size_t>(i)] = a.tail < a.head;
  }
  return OrientedGraph(std::move(g), std::move(dir));
}

Arc OrientedGraph::arc(int i) const {
  const Edge& e = graph_.edge(i);
  return direction_[static_cast<std::size_t>(i)] ? Arc{e.u, e.v} : Arc{e.v, e.u};
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) out.push_back(arc(i));
  return out;
}

bool OrientedGraph::has_arc(int tail, int head) const {
  const auto idx = graph_.edge_index(tail, head);
  return idx && arc(*idx).tail == tail;
}

int OrientedGraph::min_out_degree() const {
  if (order() == 0) return 0;
  int best = out_degree(0);
  for (int v = 1; v < order(); ++v) best = std::min(best, out_degree(v));
  return best;
}

int OrientedGraph::max_out_degree() const {
  int best = 0;
  for (int v = 0; v < order(); ++v) best = std::max(best, out_degree(v));
  return best;
}

int OrientedGraph::min_in_degree() const {
  if (order() == 0) return 0;
  int best = in_degree(0);
  for (int v = 1; v < order(); ++v) best = std::min(best, in_degree(v));
  return best;
}

int OrientedGraph::max_in_degree() const {
  int best = 0;
  for (int v = 0; v < order(); ++v) best = std::max(best, in_degree(v));
  return best;
}

std::uint64_t OrientedGraph::bits() const {
  if (size() > 64) throw LimitError("orientation bits need at most 64 edges");
  std::uint64_t b = 0;
  for (int i = 0; i < size(); ++i) {
    if (direction_[static_cast<std::size_t>(i)]) b |= std::uint64_t{1} << i;
  }
  return b;
}

std::string OrientedGraph::bit_string() const {
  std::string s;
  s.reserve(direction_.size());
  for (bool b : direction_) s += b ? '1' : '0';
  return s;
}

OrientedGraph orient(const Graph& g, std::vector<bool> direction) {
  return OrientedGraph(g, std::move(direction));
}

OrientedGraph orient(const Graph& g, std::uint64_t bits) {
  if (g.size() > 64) throw LimitError("integer orientation encoding needs at most 64 edges");
  if (g.size() < 64 && (bits >> g.size()) != 0) throw ParameterError("orientation bits beyond edge count");
  std::vector<bool> dir(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) dir[static_cast<std::size_t>(i)] = (bits >> i) & 1U;
  return OrientedGraph(g, std::move(dir));
}

OrientedGraph orient(const Graph& g, std::string_view bit_string) {
  std::vector<bool> dir;
  dir.reserve(bit_string.size());
  for (char c : bit_string) {
    if (c != '0' && c != '1') throw ParameterError("orientation bit string may only contain 0 and 1");
    dir.push_back(c == '1');
  }
  return OrientedGraph(g, std::move(dir));
}

OrientedGraph reversal(const OrientedGraph& d) {
  std::vector<bool> dir = d.direction();
  dir.flip();
  return OrientedGraph(d.underlying(), std::move(dir));
}

namespace {

std::vector<int> index_map(const VertexSet& w, int n, std::vector<int>& original) {
  if (w.universe() != n) throw ParameterError("vertex set universe does not match the graph");
  if (w.empty()) throw ParameterError("induced subgraph needs a nonempty vertex set");
  original = w.members();
  std::vector<int> to_new(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < original.size(); ++i) to_new[static_cast<std::size_t>(original[i])] = static_cast<int>(i);
  return to_new;
}

}  // namespace

Induced<Graph> induced_subgraph(const Graph& g, const VertexSet& w) {
  Induced<Graph> out;
  const auto to_new = index_map(w, g.order(), out.original);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const int a = to_new[static_cast<std::size_t>(e.u)];
    const int b = to_new[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  // order-preserving relabel keeps the list sorted
  out.graph = Graph(static_cast<int>(out.original.size()), std::move(edges));
  return out;
}

Induced<OrientedGraph> induced_subgraph(const OrientedGraph& d, const VertexSet& w) {
  Induced<OrientedGraph> out;
  const auto to_new = index_map(w, d.order(), out.original);
  std::vector<Edge> edges;
  std::vector<bool> dir;
  for (int i = 0; i < d.size(); ++i) {
    const auto& e = d.underlying().edge(i);
    const int a = to_new[static_cast<std::size_t>(e.u)];
    const int b = to_new[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) {
      edges.push_back({a, b});
      dir.push_back(d.direction()[static_cast<std::size_t>(i)]);
    }
  }
  out.graph = OrientedGraph(Graph(static_cast<int>(out.original.size()), std::move(edges)), std::move(dir));
  return out;
}

std::vector<int> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

int component_count(const Graph& g) {
  const auto comp = connected_components(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

VertexSet reachable_from(const OrientedGraph& d, int from) {
  VertexSet seen(d.order());
  seen.insert(from);
  std::vector<int> stack{from};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : d.out_neighbors(u)) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(g.order(), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), std::move(edges));
}

}  // namespace okf
