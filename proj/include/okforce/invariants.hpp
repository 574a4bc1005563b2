#pragma once

#include <optional>
#include <string>
#include <vector>

#include "okforce/graph.hpp"
#include "okforce/rational.hpp"
#include "okforce/vertex_set.hpp"

namespace okf {

struct InvariantLimits {
  int max_independence_order = 20;  // alpha and clique
  int max_matching_order = 20;
  int max_induced_matching_order = 16;
  int max_path_cover_order = 14;
  int max_tree_cover_order = 12;
  int max_kary_cover_order = 12;
};

// One block of a vertex-disjoint cover: a path or tree given by its arcs directed away from `root`.
struct CoverPart {
  std::vector<int> vertices;
  std::vector<Arc> edges;
  int root = 0;
};

struct InvariantValue {
  std::string name;
  long long value = 0;
  VertexSet witness;             // alpha, clique
  std::vector<Edge> matching;    // matching, induced_matching
  std::vector<CoverPart> cover;  // rho, tree_cover_k, induced_kary_k
};

// Maximum independent set; the witness is the lexicographically least one.
InvariantValue independence_number(const Graph& g, const InvariantLimits& limits = {});
InvariantValue clique_number(const Graph& g, const InvariantLimits& limits = {});
InvariantValue matching_number(const Graph& g, const InvariantLimits& limits = {});
InvariantValue induced_matching_number(const Graph& g, const InvariantLimits& limits = {});

// Minimum number of vertex-disjoint paths covering V.
InvariantValue path_cover_number(const Graph& g, const InvariantLimits& limits = {});
// Minimum number of vertex-disjoint trees of maximum degree at most k+1 covering V.
InvariantValue tree_cover_number(const Graph& g, int k, const InvariantLimits& limits = {});
// Minimum number of vertex-disjoint out-trees of d, each vertex with at most k tree children,
// covering V. With strict_induced, each block must induce exactly its tree.
InvariantValue induced_kary_cover_number(const OrientedGraph& d, int k, bool strict_induced = false,
                                         const InvariantLimits& limits = {});

int min_degree(const Graph& g);
int max_degree(const Graph& g);
Rational average_degree(const Graph& g);
// Longest shortest-path distance; empty for disconnected graphs.
std::optional<int> diameter(const Graph& g);
bool is_independent(const Graph& g, const VertexSet& s);

// Problems found when the parts are not a vertex-disjoint cover of g by trees of maximum
// degree at most max_degree, each given by arcs directed away from its root. Empty if valid.
std::vector<std::string> tree_cover_violations(const Graph& g, const std::vector<CoverPart>& parts, int max_degree);

}  // namespace okf
