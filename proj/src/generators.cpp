#include "okforce/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "okforce/errors.hpp"

namespace okf {

namespace {

void need(bool ok, const std::string& msg) {
  if (!ok) throw ParameterError(msg);
}

int param(const FamilySpec& spec, std::size_t i) {
  need(spec.params.size() > i, family_name(spec.family) + " needs " + std::to_string(i + 1) + " integer parameter(s)");
  return spec.params[i];
}

}  // namespace

Family family_from_name(const std::string& name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "star") return Family::Star;
  if (name == "complete_bipartite") return Family::CompleteBipartite;
  if (name == "complete") return Family::Complete;
  if (name == "greedy_tree") return Family::GreedyTree;
  if (name == "gp_graph") return Family::GpGraph;
  if (name == "gnp" || name == "gnp_random") return Family::Gnp;
  throw ParameterError("unknown family '" + name + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::CompleteBipartite: return "complete_bipartite";
    case Family::Complete: return "complete";
    case Family::GreedyTree: return "greedy_tree";
    case Family::GpGraph: return "gp_graph";
    case Family::Gnp: return "gnp";
  }
  return "?";
}

AnyGraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Path: return path_graph(param(spec, 0));
    case Family::Cycle: return cycle_graph(param(spec, 0));
    case Family::Star: return star_graph(param(spec, 0));
    case Family::CompleteBipartite: return complete_bipartite_graph(param(spec, 0), param(spec, 1));
    case Family::Complete: return complete_graph(param(spec, 0));
    case Family::GreedyTree: return greedy_tree(param(spec, 0), param(spec, 1));
    case Family::GpGraph: return gp_orientation(param(spec, 0));
    case Family::Gnp: return gnp_graph(param(spec, 0), spec.p, spec.seed);
  }
  throw ParameterError("unknown family");
}

Graph path_graph(int n) {
  need(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  need(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  edges.push_back({0, 1});
  edges.push_back({0, n - 1});
  for (int i = 1; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, std::move(edges));
}

Graph star_graph(int leaves) {
  need(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

Graph complete_graph(int n) {
  need(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int x, int y) {
  need(x >= 1 && y >= 1, "complete_bipartite needs x, y >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < x; ++u) {
    for (int v = x; v < x + y; ++v) edges.push_back({u, v});
  }
  return Graph(x + y, std::move(edges));
}

OrientedGraph greedy_tree(int out_degree, int layers) {
  need(out_degree >= 1, "greedy_tree needs out-degree >= 1");
  need(layers >= 1, "greedy_tree needs at least one layer");
  long long n = 0;
  long long width = 1;
  for (int i = 0; i <= layers; ++i) {
    n += width;
    width *= out_degree;
    need(n <= 100000, "greedy_tree too large");
  }
  std::vector<Edge> edges;
  for (long long c = 1; c < n; ++c) {
    edges.push_back({static_cast<int>((c - 1) / out_degree), static_cast<int>(c)});
  }
  std::sort(edges.begin(), edges.end());
  const auto m = edges.size();
  return OrientedGraph(Graph(static_cast<int>(n), std::move(edges)), std::vector<bool>(m, true));
}

OrientedGraph gp_orientation(int p) {
  need(p >= 6 && p % 2 == 0, "gp_graph needs an even p >= 6");
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < p; ++i) arcs.push_back({i, i + 1});
  for (int i = 1; i < p; i += 2) arcs.push_back({i, p});
  return OrientedGraph::from_arcs(p + 1, arcs);
}

Graph gnp_graph(int n, double p, std::uint64_t seed) {
  need(n >= 1, "gnp needs n >= 1");
  need(p >= 0.0 && p <= 1.0, "gnp probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  const bool always = p >= 1.0;
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 64));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const std::uint64_t draw = rng();
      if (always || draw < threshold) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

OrientedGraph random_orientation(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<bool> dir(static_cast<std::size_t>(g.size()));
  for (std::size_t i = 0; i < dir.size(); ++i) dir[i] = (rng() >> 63) != 0;
  return OrientedGraph(g, std::move(dir));
}

OrientedGraph forward_orientation(const Graph& g) {
  return OrientedGraph(g, std::vector<bool>(static_cast<std::size_t>(g.size()), true));
}

OrientedGraph alternating_orientation(const Graph& g) {
  std::vector<bool> dir(static_cast<std::size_t>(g.size()));
  for (std::size_t i = 0; i < dir.size(); ++i) dir[i] = i % 2 == 0;
  return OrientedGraph(g, std::move(dir));
}

}  // namespace okf
