#pragma once

#include <string>
#include <vector>

#include "okforce/graph.hpp"
#include "okforce/rational.hpp"
#include "okforce/vertex_set.hpp"

namespace okf {

enum class RootPolicy {
  First,         // smallest vertex of every source component (a minimum reaching set)
  MinOutDegree,  // strongly reachable graphs only: smallest vertex of minimum out-degree
  Vertex,        // the given vertex, which must reach every other vertex
};

struct GreedyOptions {
  RootPolicy policy = RootPolicy::First;
  int root = 0;  // used with RootPolicy::Vertex
};

struct StallRepair {
  int vertex = 0;             // stalled colored vertex with more than k uncolored out-neighbours
  std::vector<int> colored;   // the out-neighbours colored to release it
};

struct GreedyCertificate {
  VertexSet set;
  std::vector<int> roots;
  std::vector<StallRepair> repairs;
  Rational bound;
  std::string bound_name;  // reachable | reaching_set | strongly_reachable
};

// Colors each root plus all but k of its uncolored out-neighbours, propagates, and at every
// stall colors all but k uncolored out-neighbours of the smallest stalled vertex. Roots are
// processed in order, each finishing everything it reaches before the next starts.
// Throws Inapplicable when k exceeds the maximum out-degree or the policy's hypothesis fails.
GreedyCertificate greedy_forcing_set(const OrientedGraph& d, int k, const GreedyOptions& options = {});

struct BoundEntry {
  std::string name;
  std::string side;    // lower | upper
  std::string target;  // F_k | mof_k | MOF_k | MOF
  Rational value;
  bool applicable = false;
  std::string reason;  // hypothesis checked, or the one that failed
  std::string anchor;  // the inequality, as a formula
};

using BoundReport = std::vector<BoundEntry>;

// Lower bounds on F_k(d): max{delta+ - k + 1, 1}, the in-degree-0 count, IT_k(d).
BoundReport lower_bound_report(const OrientedGraph& d, int k);
// Lower bounds plus the greedy upper bounds on F_k(d).
BoundReport forcing_bound_report(const OrientedGraph& d, int k);

struct ExtremalOptions {
  // Largest induced subgraph order swept by the F(H) + n - |H| entry (proper subgraphs only).
  int induced_subgraph_cap = 6;
  // Exact MOF of subgraphs (induced sweep, bridge split) is only attempted up to this many edges.
  int max_exact_edges = 16;
};

// Bounds on mof_k, MOF_k and MOF of g.
BoundReport extremal_bound_report(const Graph& g, int k, const ExtremalOptions& options = {});

// Repeatedly deletes a smallest-index minimum-degree vertex while its degree is below half of
// g's average degree; the survivors induce a subgraph of minimum degree at least d(g)/2.
VertexSet dense_subgraph(const Graph& g);

}  // namespace okf
