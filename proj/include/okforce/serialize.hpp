#pragma once

#include <json.hpp>

#include "okforce/bounds.hpp"
#include "okforce/constructions.hpp"
#include "okforce/forcing.hpp"
#include "okforce/graph.hpp"
#include "okforce/invariants.hpp"
#include "okforce/rational.hpp"
#include "okforce/solver.hpp"
#include "okforce/vertex_set.hpp"

namespace okf {

using json = nlohmann::json;

json to_json(const VertexSet& s);
json to_json(const Rational& r);  // {"num", "den"}
json to_json(const Graph& g);     // {"n", "edges"}
json to_json(const OrientedGraph& d);  // {"n", "arcs", "bits"}
json to_json(const ForcingTrace& t);   // array of rounds of [forcer, forced]
json to_json(const ChainForest& f);
json to_json(const std::vector<CoverPart>& cover);  // {"parts": [{vertices, edges, root}]}
json to_json(const InvariantValue& v);
json to_json(const GreedyCertificate& c);
json to_json(const BoundReport& r);
json to_json(const TreeCoverOrientation& t);
json to_json(const ReachingSetResult& r);

// {problem, parameters, value, witness, explored, limits_hit}
json solve_json(const std::string& problem, const json& parameters, const ForcingResult& r);
json solve_json(const std::string& problem, const json& parameters, const OrientationResult& r);

Graph graph_from_json(const json& j);
OrientedGraph oriented_from_json(const json& j);
std::vector<CoverPart> cover_from_json(const json& j);

}  // namespace okf
