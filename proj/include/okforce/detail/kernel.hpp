#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "okforce/graph.hpp"

namespace okf::detail {

inline constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

inline std::uint64_t low_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Adjacency of an oriented graph on at most 64 vertices as bitmasks.
struct BitDigraph {
  int n = 0;
  std::uint64_t all = 0;
  std::array<std::uint64_t, 64> out{};
  std::array<std::uint64_t, 64> in{};

  static BitDigraph empty(int order) {
    BitDigraph g;
    g.n = order;
    g.all = low_mask(order);
    return g;
  }

  static BitDigraph from(const OrientedGraph& d) {
    BitDigraph g = empty(d.order());
    for (int i = 0; i < d.size(); ++i) {
      const Arc a = d.arc(i);
      g.add_arc(a.tail, a.head);
    }
    return g;
  }

  void add_arc(int tail, int head) {
    out[tail] |= bit(head);
    in[head] |= bit(tail);
  }

  // Reverses whichever arc currently joins u and v.
  void flip(int u, int v) {
    out[u] ^= bit(v);
    out[v] ^= bit(u);
    in[u] ^= bit(v);
    in[v] ^= bit(u);
  }

  std::uint64_t sources() const {
    std::uint64_t s = 0;
    for (int v = 0; v < n; ++v) {
      if (in[v] == 0) s |= bit(v);
    }
    return s;
  }

  // Sweeps the colored vertices that may still force until a sweep colors nothing. Forces
  // inside a sweep see the latest colored set; the final set is the same as with
  // simultaneous rounds because a colored vertex's count of uncolored out-neighbours
  // only ever shrinks. The sweep body is branch-free: data-dependent branches here
  // mispredict constantly.
  std::uint64_t closure(std::uint64_t s, int k) const {
    std::uint64_t active = s & all;
    return sweep(s & all, active, k);
  }

  // `active` in: colored vertices to examine; out: colored vertices that are blocked.
  std::uint64_t sweep(std::uint64_t colored, std::uint64_t& active, int k) const {
    for (;;) {
      const std::uint64_t before = colored;
      for (std::uint64_t it = active; it != 0; it &= it - 1) {
        const int v = std::countr_zero(it);
        const std::uint64_t fresh = out[v] & ~colored;
        const std::uint64_t ok = std::uint64_t{0} - static_cast<std::uint64_t>(std::popcount(fresh) <= k);
        colored |= fresh & ok;
        active = (active | (fresh & ok)) & ~(bit(v) & ok);
      }
      if (colored == before) return colored;
    }
  }

  bool forces(std::uint64_t s, int k) const { return closure(s, k) == all; }

  int min_out_degree(std::uint64_t within) const {
    int best = 64;
    for (std::uint64_t it = within; it != 0; it &= it - 1) {
      const int d = std::popcount(out[std::countr_zero(it)]);
      if (d < best) best = d;
    }
    return best;
  }

  // Weakly connected components, ordered by smallest member.
  std::vector<std::uint64_t> weak_components() const {
    std::vector<std::uint64_t> comps;
    std::uint64_t left = all;
    while (left != 0) {
      std::uint64_t comp = left & (~left + 1);
      std::uint64_t frontier = comp;
      while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t it = frontier; it != 0; it &= it - 1) {
          const int v = std::countr_zero(it);
          next |= out[v] | in[v];
        }
        frontier = next & ~comp;
        comp |= next;
      }
      comps.push_back(comp);
      left &= ~comp;
    }
    return comps;
  }
};

// Cheap upper bound on F_k: start from `start`, apply forces, and whenever the process
// stalls either color the surplus out-neighbours of the smallest blocked vertex or,
// if nothing colored has uncolored out-neighbours, the smallest uncolored vertex.
inline int quick_forcing_upper_bound(const BitDigraph& g, int k, std::uint64_t start) {
  std::uint64_t active = start & g.all;
  std::uint64_t colored = g.sweep(start & g.all, active, k);
  int size = std::popcount(start & g.all);
  while (colored != g.all) {
    std::uint64_t add = 0;
    if (active != 0) {
      std::uint64_t fresh = g.out[std::countr_zero(active)] & ~colored;
      for (int i = std::popcount(fresh) - k; i > 0; --i) {
        add |= fresh & (~fresh + 1);
        fresh &= fresh - 1;
      }
    } else {
      const std::uint64_t rest = g.all & ~colored;
      add = rest & (~rest + 1);
    }
    size += std::popcount(add);
    active |= add;
    colored = g.sweep(colored | add, active, k);
  }
  return size;
}

// Lexicographically least forcing set of the component `comp` that contains `mandatory`
// and has exactly `size` members, or 0 if there is none. `explored` counts closures.
inline std::uint64_t find_forcing_subset(const BitDigraph& g, int k, std::uint64_t comp, std::uint64_t mandatory,
                                         int size, std::uint64_t& explored) {
  const int base = std::popcount(mandatory);
  const int r = size - base;
  if (r < 0) return 0;
  int pool[64];
  int p = 0;
  for (std::uint64_t it = comp & ~mandatory; it != 0; it &= it - 1) pool[p++] = std::countr_zero(it);
  if (r > p) return 0;
  if (r == 0) {
    ++explored;
    return (g.closure(mandatory, k) & comp) == comp ? mandatory : 0;
  }
  int idx[64];
  for (int i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    std::uint64_t s = mandatory;
    for (int i = 0; i < r; ++i) s |= bit(pool[idx[i]]);
    ++explored;
    if ((g.closure(s, k) & comp) == comp) return s;
    int i = r - 1;
    while (i >= 0 && idx[i] == p - r + i) --i;
    if (i < 0) return 0;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct MaskSolution {
  int value = 0;
  std::uint64_t witness = 0;
};

// Exact minimum forcing set of one weakly connected component, searching sizes upward
// from the smallest admissible one. Stops early and returns value = cap + 1 (witness 0)
// once every size up to `cap` has failed.
inline MaskSolution min_forcing_component(const BitDigraph& g, int k, std::uint64_t comp, std::uint64_t& explored,
                                          int floor = 1, int cap = 64) {
  const std::uint64_t mandatory = g.sources() & comp;
  int lb = g.min_out_degree(comp) - k + 1;
  if (lb < 1) lb = 1;
  if (lb < std::popcount(mandatory)) lb = std::popcount(mandatory);
  if (lb < floor) lb = floor;
  const int top = std::popcount(comp);
  for (int c = lb; c <= top && c <= cap; ++c) {
    const std::uint64_t s = find_forcing_subset(g, k, comp, mandatory, c, explored);
    if (s != 0) return {c, s};
  }
  return {cap + 1, 0};
}

inline MaskSolution min_forcing(const BitDigraph& g, int k, std::uint64_t& explored) {
  MaskSolution total;
  for (const std::uint64_t comp : g.weak_components()) {
    const MaskSolution part = min_forcing_component(g, k, comp, explored);
    total.value += part.value;
    total.witness |= part.witness;
  }
  return total;
}

}  // namespace okf::detail
