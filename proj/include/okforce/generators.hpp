#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "okforce/graph.hpp"

namespace okf {

enum class Family { Path, Cycle, Star, CompleteBipartite, Complete, GreedyTree, GpGraph, Gnp };

// Named family plus its parameters. Parameter meaning per family:
//   path n | cycle n | star q (q leaves, centre 0) | complete_bipartite x y | complete n
//   greedy_tree out_degree layers | gp_graph p | gnp n (probability p, seed)
struct FamilySpec {
  Family family = Family::Path;
  std::vector<int> params;
  double p = 0.5;
  std::uint64_t seed = 0;
};

using AnyGraph = std::variant<Graph, OrientedGraph>;

AnyGraph generate(const FamilySpec& spec);

Family family_from_name(const std::string& name);
std::string family_name(Family f);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int x, int y);

// Complete out-tree in heap layout: vertex i has children out_degree*i+1 .. out_degree*i+out_degree,
// layers 0..layers, every arc directed away from the root 0.
OrientedGraph greedy_tree(int out_degree, int layers);

// Path x_1..x_p (vertices 0..p-1) directed forward, plus hub vertex p joined to the
// even-indexed path vertices x_2, x_4, ..., x_p, each directed towards the hub.
OrientedGraph gp_orientation(int p);

// Edge {u,v}, visited in lexicographic order, is present iff the next std::mt19937_64
// draw is below floor(p * 2^64).
Graph gnp_graph(int n, double p, std::uint64_t seed);

// Bit i is the top bit of the i-th std::mt19937_64 draw.
OrientedGraph random_orientation(const Graph& g, std::uint64_t seed);

// Convenience orientations by edge order.
OrientedGraph forward_orientation(const Graph& g);   // every edge low -> high
OrientedGraph alternating_orientation(const Graph& g);  // bits 1,0,1,0,...

}  // namespace okf
