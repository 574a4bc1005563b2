#pragma once

#include <cstdint>
#include <type_traits>
#include <vector>

#include "okforce/errors.hpp"
#include "okforce/graph.hpp"

namespace okf {

struct EnumerationLimits {
  int max_orientation_edges = 24;
  int max_graph_order = 8;
  int max_tree_order = 10;
  int max_canonical_order = 7;
};

namespace detail {

// Visitors may return void or bool; returning false stops the enumeration.
template <class F, class... Args>
bool visit_continue(F& f, Args&&... args) {
  if constexpr (std::is_void_v<std::invoke_result_t<F&, Args...>>) {
    f(std::forward<Args>(args)...);
    return true;
  } else {
    return static_cast<bool>(f(std::forward<Args>(args)...));
  }
}

}  // namespace detail

// All 2^m orientations in increasing order of OrientedGraph::bits().
template <class F>
void for_each_orientation(const Graph& g, F&& visit, const EnumerationLimits& limits = {}) {
  require_limit(g.size(), limits.max_orientation_edges, "edge count for orientation enumeration");
  const std::uint64_t total = std::uint64_t{1} << g.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    if (!detail::visit_continue(visit, orient(g, bits))) return;
  }
}

// Pair index of {u,v} (u<v) in the lexicographic order over all pairs of 0..n-1.
int pair_index(int n, int u, int v);
int pair_count(int n);

// Labeled graph whose edge set is the set bits of `code` over the pair order.
Graph labeled_graph(int n, std::uint64_t code);
std::uint64_t labeled_code(const Graph& g);

// All 2^(n choose 2) labeled graphs in increasing code order, optionally only the connected ones.
template <class F>
void for_each_labeled_graph(int n, bool connected_only, F&& visit, const EnumerationLimits& limits = {}) {
  require_limit(n, limits.max_graph_order, "order for labeled graph enumeration");
  if (n < 1) return;
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    Graph g = labeled_graph(n, code);
    if (connected_only && !is_connected(g)) continue;
    if (!detail::visit_continue(visit, g)) return;
  }
}

// Tree with the given Pruefer sequence (length n-2, entries in 0..n-1).
Graph prufer_decode(int n, const std::vector<int>& sequence);

// All n^(n-2) labeled trees in lexicographic order of their Pruefer sequences.
template <class F>
void for_each_labeled_tree(int n, F&& visit, const EnumerationLimits& limits = {}) {
  require_limit(n, limits.max_tree_order, "order for labeled tree enumeration");
  if (n < 1) return;
  if (n == 1) {
    detail::visit_continue(visit, Graph(1, {}));
    return;
  }
  if (n == 2) {
    detail::visit_continue(visit, Graph(2, {{0, 1}}));
    return;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  for (;;) {
    if (!detail::visit_continue(visit, prufer_decode(n, seq))) return;
    int i = n - 3;
    while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) {
      seq[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++seq[static_cast<std::size_t>(i)];
  }
}

// Brute-force canonical form: the minimum labeled code over all vertex permutations.
std::uint64_t canonical_code(const Graph& g, const EnumerationLimits& limits = {});
Graph canonical_form(const Graph& g, const EnumerationLimits& limits = {});

}  // namespace okf
