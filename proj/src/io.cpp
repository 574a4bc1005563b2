#include "okforce/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "okforce/errors.hpp"

namespace okf {

namespace {

struct PairList {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
};

PairList parse_pairs(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::vector<long long> row;
    long long x = 0;
    while (in >> x) row.push_back(x);
    if (!in.eof()) throw ParameterError("line " + std::to_string(line_no) + ": expected integers");
    if (row.empty()) continue;
    if (row.size() != 2) throw ParameterError("line " + std::to_string(line_no) + ": expected two integers");
    rows.push_back(row);
  }
  if (rows.empty()) throw ParameterError("missing header line \"n m\"");
  const long long n = rows[0][0];
  const long long m = rows[0][1];
  if (n < 0 || m < 0 || n > 1'000'000) throw ParameterError("header \"n m\" out of range");
  if (static_cast<long long>(rows.size()) - 1 != m) {
    throw ParameterError("header declares " + std::to_string(m) + " edges but " + std::to_string(rows.size() - 1) +
                         " follow");
  }
  PairList out;
  out.n = static_cast<int>(n);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const long long a = rows[i][0];
    const long long b = rows[i][1];
    if (a < 0 || b < 0 || a >= n || b >= n) throw ParameterError("endpoint out of range in pair " + std::to_string(i));
    out.pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dot_nodes(int n, const VertexSet* colored) {
  std::string out;
  for (int v = 0; v < n; ++v) {
    out += "  " + std::to_string(v);
    if (colored != nullptr && colored->contains(v)) out += " [style=filled]";
    out += ";\n";
  }
  return out;
}

}  // namespace

Graph parse_ug(std::string_view text) {
  const PairList p = parse_pairs(text);
  std::vector<Edge> edges;
  edges.reserve(p.pairs.size());
  for (const auto& [a, b] : p.pairs) edges.push_back({a, b});
  return Graph::from_edges(p.n, std::move(edges));
}

OrientedGraph parse_dg(std::string_view text) {
  const PairList p = parse_pairs(text);
  std::vector<Arc> arcs;
  arcs.reserve(p.pairs.size());
  for (const auto& [a, b] : p.pairs) arcs.push_back({a, b});
  return OrientedGraph::from_arcs(p.n, arcs);
}

std::string format_ug(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string format_dg(const OrientedGraph& d) {
  std::string out = std::to_string(d.order()) + " " + std::to_string(d.size()) + "\n";
  for (const Arc& a : d.arcs()) out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return out;
}

AnyGraph read_graph_file(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".ug") return parse_ug(read_text(path));
  if (ext == ".dg") return parse_dg(read_text(path));
  throw ParameterError("unknown graph file extension '" + ext + "' (expected .ug or .dg)");
}

void write_graph_file(const std::filesystem::path& path, const AnyGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path.string());
  if (const auto* d = std::get_if<OrientedGraph>(&g)) {
    out << format_dg(*d);
  } else {
    out << format_ug(std::get<Graph>(g));
  }
}

std::string to_dot(const Graph& g, const VertexSet* colored) {
  std::string out = "graph G {\n" + dot_nodes(g.order(), colored);
  for (const Edge& e : g.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  return out + "}\n";
}

std::string to_dot(const OrientedGraph& d, const VertexSet* colored) {
  std::string out = "digraph D {\n" + dot_nodes(d.order(), colored);
  for (const Arc& a : d.arcs()) out += "  " + std::to_string(a.tail) + " -> " + std::to_string(a.head) + ";\n";
  return out + "}\n";
}

}  // namespace okf
