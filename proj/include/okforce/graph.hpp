#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "okforce/vertex_set.hpp"

namespace okf {

// Unordered pair, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Ordered pair tail -> head.
struct Arc {
  int tail = 0;
  int head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Finite simple undirected graph on vertices 0..n-1. The edge list is the
// canonical identity of each edge: edge i is the i-th pair in lexicographic order.
class Graph {
 public:
  Graph() = default;
  // Strict: edges must already be canonical (u < v, strictly increasing, no loops).
  Graph(int n, std::vector<Edge> edges);
  // Accepts pairs in any order/orientation; rejects loops and duplicates.
  static Graph from_edges(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  int min_degree() const;
  int max_degree() const;
  bool adjacent(int u, int v) const;
  std::optional<int> edge_index(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// A Graph plus one direction bit per edge: bit i set means edge {u,v} (u<v)
// is the arc u->v, clear means v->u.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  OrientedGraph(Graph g, std::vector<bool> direction);
  // Builds the underlying graph from an arc list; rejects antiparallel pairs.
  static OrientedGraph from_arcs(int n, const std::vector<Arc>& arcs);

  const Graph& underlying() const { return graph_; }
  int order() const { return graph_.order(); }
  int size() const { return graph_.size(); }
  const std::vector<bool>& direction() const { return direction_; }

  Arc arc(int i) const;
  std::vector<Arc> arcs() const;
  bool has_arc(int tail, int head) const;

  std::span<const int> out_neighbors(int v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const int> in_neighbors(int v) const { return in_[static_cast<std::size_t>(v)]; }
  int out_degree(int v) const { return static_cast<int>(out_[static_cast<std::size_t>(v)].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[static_cast<std::size_t>(v)].size()); }
  int min_out_degree() const;
  int max_out_degree() const;
  int min_in_degree() const;
  int max_in_degree() const;

  // Direction vector read as an integer, edge i at bit i. Requires m <= 64.
  std::uint64_t bits() const;
  // Character i is the bit of edge i.
  std::string bit_string() const;

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.graph_ == b.graph_ && a.direction_ == b.direction_;
  }

 private:
  Graph graph_;
  std::vector<bool> direction_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

OrientedGraph orient(const Graph& g, std::vector<bool> direction);
OrientedGraph orient(const Graph& g, std::uint64_t bits);
OrientedGraph orient(const Graph& g, std::string_view bit_string);
OrientedGraph reversal(const OrientedGraph& d);

template <class G>
struct Induced {
  G graph;
  std::vector<int> original;  // new index -> original vertex
};

Induced<Graph> induced_subgraph(const Graph& g, const VertexSet& w);
Induced<OrientedGraph> induced_subgraph(const OrientedGraph& d, const VertexSet& w);

// Component id per vertex, numbered in order of smallest member.
std::vector<int> connected_components(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

// Vertices reachable from `from` along arcs (includes `from`).
VertexSet reachable_from(const OrientedGraph& d, int from);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace okf
