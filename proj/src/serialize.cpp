#include "okforce/serialize.hpp"

#include "okforce/errors.hpp"

namespace okf {

json to_json(const VertexSet& s) { return s.members(); }

json to_json(const Rational& r) { return {{"num", r.num}, {"den", r.den}}; }

json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", edges}};
}

json to_json(const OrientedGraph& d) {
  json arcs = json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head});
  return {{"n", d.order()}, {"arcs", arcs}, {"bits", d.bit_string()}};
}

json to_json(const ForcingTrace& t) {
  json rounds = json::array();
  for (const auto& round : t.rounds) {
    json r = json::array();
    for (const Force& f : round) r.push_back({f.forcer, f.forced});
    rounds.push_back(r);
  }
  return rounds;
}

json to_json(const ChainForest& f) {
  json parent = json::array();
  for (const auto& p : f.parent) parent.push_back(p ? json(*p) : json(nullptr));
  return {{"parent", parent}, {"roots", to_json(f.roots)}, {"components", f.component_count()}};
}

json to_json(const std::vector<CoverPart>& cover) {
  json parts = json::array();
  for (const CoverPart& p : cover) {
    json edges = json::array();
    for (const Arc& a : p.edges) edges.push_back({a.tail, a.head});
    parts.push_back({{"vertices", p.vertices}, {"edges", edges}, {"root", p.root}});
  }
  return {{"parts", parts}};
}

json to_json(const InvariantValue& v) {
  json j = {{"name", v.name}, {"value", v.value}};
  if (v.witness.universe() > 0) j["witness"] = to_json(v.witness);
  if (!v.matching.empty()) {
    json m = json::array();
    for (const Edge& e : v.matching) m.push_back({e.u, e.v});
    j["matching"] = m;
  }
  if (!v.cover.empty()) j["cover"] = to_json(v.cover)["parts"];
  return j;
}

json to_json(const GreedyCertificate& c) {
  json repairs = json::array();
  for (const auto& r : c.repairs) repairs.push_back({{"vertex", r.vertex}, {"colored", r.colored}});
  return {{"set", to_json(c.set)}, {"size", c.set.count()},   {"roots", c.roots},
          {"repairs", repairs},    {"bound", to_json(c.bound)}, {"bound_name", c.bound_name}};
}

json to_json(const BoundReport& r) {
  json out = json::array();
  for (const BoundEntry& e : r) {
    out.push_back({{"name", e.name},
                   {"side", e.side},
                   {"target", e.target},
                   {"value", to_json(e.value)},
                   {"applicable", e.applicable},
                   {"reason", e.reason},
                   {"anchor", e.anchor}});
  }
  return out;
}

json to_json(const TreeCoverOrientation& t) {
  return {{"orientation", to_json(t.orientation)}, {"roots", to_json(t.roots)}, {"level", t.level}};
}

json to_json(const ReachingSetResult& r) { return {{"roots", r.root_list}, {"assignment", r.assignment}}; }

json solve_json(const std::string& problem, const json& parameters, const ForcingResult& r) {
  return {{"problem", problem},
          {"parameters", parameters},
          {"value", r.value},
          {"witness", {{"set", to_json(r.witness)}}},
          {"explored", r.explored},
          {"limits_hit", r.limits_hit}};
}

json solve_json(const std::string& problem, const json& parameters, const OrientationResult& r) {
  return {{"problem", problem},
          {"parameters", parameters},
          {"value", r.value},
          {"witness", {{"orientation", to_json(r.orientation)}, {"set", to_json(r.witness)}}},
          {"explored", r.explored},
          {"limits_hit", r.limits_hit}};
}

Graph graph_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return Graph::from_edges(j.at("n").get<int>(), std::move(edges));
}

OrientedGraph oriented_from_json(const json& j) {
  std::vector<Arc> arcs;
  for (const auto& a : j.at("arcs")) arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
  return OrientedGraph::from_arcs(j.at("n").get<int>(), arcs);
}

std::vector<CoverPart> cover_from_json(const json& j) {
  const json& parts = j.is_object() ? j.at("parts") : j;
  std::vector<CoverPart> cover;
  for (const auto& p : parts) {
    CoverPart part;
    part.vertices = p.at("vertices").get<std::vector<int>>();
    for (const auto& e : p.at("edges")) part.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    part.root = p.at("root").get<int>();
    cover.push_back(std::move(part));
  }
  return cover;
}

}  // namespace okf
