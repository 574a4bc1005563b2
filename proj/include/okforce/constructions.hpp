#pragma once

#include <utility>
#include <vector>

#include "okforce/graph.hpp"
#include "okforce/invariants.hpp"
#include "okforce/vertex_set.hpp"

namespace okf {

// |d+(v) - d-(v)| <= 1 everywhere. An auxiliary vertex is joined to every odd-degree
// vertex, each component is walked Hierholzer-style (smallest vertex with an unused
// edge first, smallest-index unused edge at every step) and every edge is directed the
// way the walk crossed it.
OrientedGraph balanced_orientation(const Graph& g);

// Edges touching i point out of i; all other edges point from low to high index.
OrientedGraph orient_away_from(const Graph& g, const VertexSet& i);

// A vertex of maximum degree (smallest index) points at all its neighbours; other edges
// point from low to high index. Its maximum out-degree equals the maximum degree of g.
OrientedGraph max_degree_out_orientation(const Graph& g);

struct TreeCoverOrientation {
  OrientedGraph orientation;
  VertexSet roots;
  std::vector<int> level;  // distance from the root of the vertex's tree
};

// Orients each tree of a (k+1)-tree cover away from its root; every remaining edge goes
// from the higher-level endpoint to the lower-level one. Ties between trees go to the
// endpoint in the earlier part; ties inside one tree go to the smaller vertex. Part edges
// may be listed in either direction. Roots must have at most k tree neighbours.
TreeCoverOrientation tree_cover_orientation(const Graph& g, const std::vector<CoverPart>& cover, int k);

struct Condensation {
  std::vector<int> component;             // SCC id per vertex, ids ordered by smallest member
  std::vector<std::vector<int>> members;  // sorted members per SCC
  std::vector<std::pair<int, int>> arcs;  // distinct arcs between SCCs, sorted
  std::vector<int> sources;               // SCC ids with no incoming arc
};

Condensation condensation(const OrientedGraph& d);

struct ReachingSetResult {
  VertexSet roots;
  std::vector<int> root_list;   // roots in increasing index order
  std::vector<int> assignment;  // position in root_list of the first root reaching each vertex
};

// Smallest-index vertex of every source SCC: a minimum reaching set.
ReachingSetResult min_reaching_set(const OrientedGraph& d);

bool is_reachable(const OrientedGraph& d);
bool is_strongly_reachable(const OrientedGraph& d);

// Connected, at least one edge, and no bridges.
bool is_two_edge_connected(const Graph& g);
std::vector<Edge> bridges(const Graph& g);

bool is_balanced(const OrientedGraph& d);

}  // namespace okf
