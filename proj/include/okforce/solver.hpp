#pragma once

#include <cstdint>
#include <string>

#include "okforce/graph.hpp"
#include "okforce/vertex_set.hpp"

namespace okf {

struct SolveLimits {
  int max_subset_order = 20;       // vertices for the exact F_k search
  int max_orientation_edges = 20;  // edges for mof/MOF enumeration
};

struct ForcingResult {
  int value = 0;
  VertexSet witness;  // lexicographically least minimum forcing set
  std::uint64_t explored = 0;  // closures evaluated
  bool limits_hit = false;
};

// F_k(d): in-degree-0 vertices are mandatory, weak components are solved independently,
// and candidate sizes start at max{delta+ - k + 1, 1, mandatory count}.
ForcingResult min_forcing_number(const OrientedGraph& d, int k, const SolveLimits& limits = {});

// Reference implementation: all subsets by increasing size, no pruning or decomposition.
ForcingResult forcing_number_brute(const OrientedGraph& d, int k, const SolveLimits& limits = {});

struct ExtremeOptions {
  int threads = 1;
  // mof: stop a component's scan once its running minimum reaches T_k of the component.
  bool tree_cover_exit = true;
  // k = 1 only: score one orientation of each reversal pair.
  bool reversal_dedup = true;
  SolveLimits limits;
};

struct OrientationResult {
  int value = 0;
  OrientedGraph orientation;  // least direction vector (as an integer) attaining the value
  VertexSet witness;          // minimum forcing set of `orientation`
  std::uint64_t explored = 0; // orientations scored
  bool limits_hit = false;
};

OrientationResult min_oriented_forcing_number(const Graph& g, int k, const ExtremeOptions& options = {});
OrientationResult max_oriented_forcing_number(const Graph& g, int k, const ExtremeOptions& options = {});

}  // namespace okf
