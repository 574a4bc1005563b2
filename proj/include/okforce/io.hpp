#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "okforce/generators.hpp"
#include "okforce/graph.hpp"
#include "okforce/vertex_set.hpp"

namespace okf {

// ".ug": "n m" then m lines "u v". ".dg": same layout, each line an arc u -> v.
// '#' starts a comment; blank lines are ignored.
Graph parse_ug(std::string_view text);
OrientedGraph parse_dg(std::string_view text);
std::string format_ug(const Graph& g);
std::string format_dg(const OrientedGraph& d);

// Dispatches on the extension (.ug or .dg).
AnyGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const AnyGraph& g);

// Vertices in `colored` (if given) get style=filled.
std::string to_dot(const Graph& g, const VertexSet* colored = nullptr);
std::string to_dot(const OrientedGraph& d, const VertexSet* colored = nullptr);

}  // namespace okf
