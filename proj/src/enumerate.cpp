#include "okforce/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace okf {

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  // pairs (0,1..n-1), (1,2..n-1), ...
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

Graph labeled_graph(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int idx = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++idx) {
      if ((code >> idx) & 1U) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

std::uint64_t labeled_code(const Graph& g) {
  if (pair_count(g.order()) > 64) throw LimitError("labeled code needs at most 64 vertex pairs");
  std::uint64_t code = 0;
  for (const auto& e : g.edges()) code |= std::uint64_t{1} << pair_index(g.order(), e.u, e.v);
  return code;
}

Graph prufer_decode(int n, const std::vector<int>& sequence) {
  if (n < 2 || static_cast<int>(sequence.size()) != n - 2) {
    throw ParameterError("Pruefer sequence for n vertices must have length n-2");
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) throw ParameterError("Pruefer entry out of range");
    ++degree[static_cast<std::size_t>(x)];
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int x : sequence) {
    int leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(x)];
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.push_back({a, v});
        break;
      }
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

std::uint64_t canonical_code(const Graph& g, const EnumerationLimits& limits) {
  const int n = g.order();
  require_limit(n, limits.max_canonical_order, "order for brute-force canonical form");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (const auto& e : g.edges()) {
      code |= std::uint64_t{1} << pair_index(n, perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? 0 : best;
}

Graph canonical_form(const Graph& g, const EnumerationLimits& limits) {
  return labeled_graph(g.order(), canonical_code(g, limits));
}

}  // namespace okf
