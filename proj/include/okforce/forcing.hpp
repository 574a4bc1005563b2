#pragma once

#include <optional>
#include <string>
#include <vector>

#include "okforce/graph.hpp"
#include "okforce/vertex_set.hpp"

namespace okf {

struct Force {
  int forcer = 0;
  int forced = 0;
  friend bool operator==(const Force&, const Force&) = default;
};

// Round-by-round record of the k-forcing process. Each round lists every vertex
// forced in that round once, paired with its smallest-index forcer, in (forcer, forced) order.
struct ForcingTrace {
  VertexSet initial;
  std::vector<std::vector<Force>> rounds;
  VertexSet final_set;
};

// One simultaneous application of the k-color change rule: every (u, w) with u colored,
// w an uncolored out-neighbour of u, and u having between 1 and k uncolored out-neighbours.
// Empty iff the process has stalled.
std::vector<Force> step(const OrientedGraph& d, const VertexSet& colored, int k);

ForcingTrace closure(const OrientedGraph& d, const VertexSet& s, int k);
// Same final set as closure(), without recording the trace.
VertexSet closure_set(const OrientedGraph& d, const VertexSet& s, int k);
bool is_forcing_set(const OrientedGraph& d, const VertexSet& s, int k);

// Spanning forest of forcing chains: parent[v] is the vertex that forced v, absent on roots.
struct ChainForest {
  std::vector<std::optional<int>> parent;
  VertexSet roots;

  std::vector<std::vector<int>> children() const;
  int component_count() const;
  // Root of the chain containing v.
  int root_of(int v) const;
};

// Parent of each forced vertex is its smallest-index forcer in the round it was forced.
ChainForest forcing_chains(const OrientedGraph& d, const VertexSet& s, int k);

// Empty when the forest is a valid set of k-forcing chains for d.
std::vector<std::string> chain_forest_violations(const OrientedGraph& d, const ChainForest& forest, int k);

// "round 1: 0>1, 2>3" one line per round.
std::string trace_to_text(const ForcingTrace& trace);

}  // namespace okf
