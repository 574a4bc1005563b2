#include "okforce/forcing.hpp"

#include <sstream>

#include "okforce/errors.hpp"

namespace okf {

namespace {

void check_args(const OrientedGraph& d, const VertexSet& s, int k) {
  if (k <= 0) throw ParameterError("k must be a positive integer");
  if (s.universe() != d.order()) throw ParameterError("vertex set universe does not match the graph");
  if (s.empty()) throw ParameterError("the initial colored set must be nonempty");
}

std::vector<int> uncolored_out_counts(const OrientedGraph& d, const VertexSet& colored) {
  std::vector<int> cnt(static_cast<std::size_t>(d.order()), 0);
  for (int v = 0; v < d.order(); ++v) {
    for (int w : d.out_neighbors(v)) {
      if (!colored.contains(w)) ++cnt[static_cast<std::size_t>(v)];
    }
  }
  return cnt;
}

// Forces of one round, deduplicated to the smallest forcer per forced vertex.
std::vector<Force> round_forces(const OrientedGraph& d, const VertexSet& colored, const std::vector<int>& cnt, int k,
                                VertexSet& claimed) {
  std::vector<Force> forces;
  for (int u = 0; u < d.order(); ++u) {
    const int c = cnt[static_cast<std::size_t>(u)];
    if (c == 0 || c > k || !colored.contains(u)) continue;
    for (int w : d.out_neighbors(u)) {
      if (colored.contains(w) || claimed.contains(w)) continue;
      claimed.insert(w);
      forces.push_back({u, w});
    }
  }
  return forces;
}

void apply(const OrientedGraph& d, const std::vector<Force>& forces, VertexSet& colored, std::vector<int>& cnt) {
  for (const auto& f : forces) {
    colored.insert(f.forced);
    for (int t : d.in_neighbors(f.forced)) --cnt[static_cast<std::size_t>(t)];
  }
}

}  // namespace

std::vector<Force> step(const OrientedGraph& d, const VertexSet& colored, int k) {
  check_args(d, colored, k);
  std::vector<Force> forces;
  for (int u = 0; u < d.order(); ++u) {
    if (!colored.contains(u)) continue;
    int c = 0;
    for (int w : d.out_neighbors(u)) c += colored.contains(w) ? 0 : 1;
    if (c == 0 || c > k) continue;
    for (int w : d.out_neighbors(u)) {
      if (!colored.contains(w)) forces.push_back({u, w});
    }
  }
  return forces;
}

ForcingTrace closure(const OrientedGraph& d, const VertexSet& s, int k) {
  check_args(d, s, k);
  ForcingTrace trace{s, {}, s};
  auto cnt = uncolored_out_counts(d, s);
  for (;;) {
    VertexSet claimed(d.order());
    auto forces = round_forces(d, trace.final_set, cnt, k, claimed);
    if (forces.empty()) break;
    apply(d, forces, trace.final_set, cnt);
    trace.rounds.push_back(std::move(forces));
  }
  return trace;
}

VertexSet closure_set(const OrientedGraph& d, const VertexSet& s, int k) {
  check_args(d, s, k);
  VertexSet colored = s;
  auto cnt = uncolored_out_counts(d, s);
  for (;;) {
    VertexSet claimed(d.order());
    const auto forces = round_forces(d, colored, cnt, k, claimed);
    if (forces.empty()) return colored;
    apply(d, forces, colored, cnt);
  }
}

bool is_forcing_set(const OrientedGraph& d, const VertexSet& s, int k) {
  return closure_set(d, s, k).count() == d.order();
}

std::vector<std::vector<int>> ChainForest::children() const {
  std::vector<std::vector<int>> out(parent.size());
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (parent[v]) out[static_cast<std::size_t>(*parent[v])].push_back(static_cast<int>(v));
  }
  return out;
}

int ChainForest::root_of(int v) const {
  std::size_t guard = 0;
  while (parent[static_cast<std::size_t>(v)]) {
    v = *parent[static_cast<std::size_t>(v)];
    if (++guard > parent.size()) throw PreconditionError("chain forest contains a cycle");
  }
  return v;
}

int ChainForest::component_count() const {
  VertexSet seen(static_cast<int>(parent.size()));
  for (std::size_t v = 0; v < parent.size(); ++v) seen.insert(root_of(static_cast<int>(v)));
  return seen.count();
}

ChainForest forcing_chains(const OrientedGraph& d, const VertexSet& s, int k) {
  const auto trace = closure(d, s, k);
  if (trace.final_set.count() != d.order()) {
    throw PreconditionError("forcing_chains needs a k-forcing set; " + s.to_string() + " colors only " +
                            trace.final_set.to_string());
  }
  ChainForest forest{std::vector<std::optional<int>>(static_cast<std::size_t>(d.order())), s};
  for (const auto& round : trace.rounds) {
    for (const auto& f : round) forest.parent[static_cast<std::size_t>(f.forced)] = f.forcer;
  }
  return forest;
}

std::vector<std::string> chain_forest_violations(const OrientedGraph& d, const ChainForest& forest, int k) {
  std::vector<std::string> out;
  const int n = d.order();
  if (static_cast<int>(forest.parent.size()) != n) {
    out.push_back("parent map has wrong length");
    return out;
  }
  for (int v = 0; v < n; ++v) {
    const auto& p = forest.parent[static_cast<std::size_t>(v)];
    if (p.has_value() == forest.roots.contains(v)) {
      out.push_back("vertex " + std::to_string(v) + (p ? " is a root but has a parent" : " has no parent but is not a root"));
    }
    if (p && !d.has_arc(*p, v)) {
      out.push_back("(" + std::to_string(*p) + "," + std::to_string(v) + ") is not an arc");
    }
  }
  if (!out.empty()) return out;
  for (int v = 0; v < n; ++v) {
    int x = v;
    int steps = 0;
    while (forest.parent[static_cast<std::size_t>(x)] && steps <= n) {
      x = *forest.parent[static_cast<std::size_t>(x)];
      ++steps;
    }
    if (steps > n) {
      out.push_back("parent map has a cycle through " + std::to_string(v));
      return out;
    }
  }
  if (forest.component_count() != forest.roots.count()) {
    out.push_back("component count " + std::to_string(forest.component_count()) + " differs from |S| = " +
                  std::to_string(forest.roots.count()));
  }
  const auto kids = forest.children();
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(kids[static_cast<std::size_t>(v)].size()) > k) {
      out.push_back("vertex " + std::to_string(v) + " has more than k children");
    }
  }
  return out;
}

std::string trace_to_text(const ForcingTrace& trace) {
  std::ostringstream os;
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    os << "round " << r + 1 << ":";
    const auto& round = trace.rounds[r];
    for (std::size_t i = 0; i < round.size(); ++i) {
      os << (i == 0 ? " " : ", ") << round[i].forcer << '>' << round[i].forced;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace okf
