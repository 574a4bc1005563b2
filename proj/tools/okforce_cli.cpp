// okforce: command-line front end for the oriented k-forcing library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "okforce/bounds.hpp"
#include "okforce/checks.hpp"
#include "okforce/constructions.hpp"
#include "okforce/errors.hpp"
#include "okforce/forcing.hpp"
#include "okforce/generators.hpp"
#include "okforce/invariants.hpp"
#include "okforce/io.hpp"
#include "okforce/serialize.hpp"
#include "okforce/solver.hpp"

namespace {

using okf::json;

struct Globals {
  bool json = false;
  int threads = 1;
  bool timing = true;
};

// Exit codes.
constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw okf::ParameterError("bad vertex '" + item + "' in list");
    }
    if (used != item.size()) throw okf::ParameterError("bad vertex '" + item + "' in list");
    out.push_back(v);
  }
  return out;
}

okf::OrientedGraph need_oriented(const okf::AnyGraph& g, const std::string& what) {
  if (const auto* d = std::get_if<okf::OrientedGraph>(&g)) return *d;
  throw okf::ParameterError(what + " needs an oriented graph (.dg)");
}

okf::Graph need_graph(const okf::AnyGraph& g) {
  if (const auto* d = std::get_if<okf::OrientedGraph>(&g)) return d->underlying();
  return std::get<okf::Graph>(g);
}

void emit(const Globals& gl, const json& j, const std::string& text) {
  if (gl.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string set_text(const okf::VertexSet& s) { return s.to_string(); }

std::string cover_text(const std::vector<okf::CoverPart>& cover) {
  std::string out;
  for (const auto& p : cover) {
    out += "  root " + std::to_string(p.root) + ":";
    for (const auto& a : p.edges) out += " " + std::to_string(a.tail) + ">" + std::to_string(a.head);
    if (p.edges.empty()) out += " (single vertex)";
    out += "\n";
  }
  return out;
}

// ------------------------------------------------------------------ gen

struct GenArgs {
  std::string family;
  std::vector<int> params;
  std::string orient = "none";
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string output;
};

int run_gen(const Globals& gl, const GenArgs& a) {
  okf::FamilySpec spec;
  spec.family = okf::family_from_name(a.family);
  spec.params = a.params;
  spec.p = a.p;
  spec.seed = a.seed;
  okf::AnyGraph g = okf::generate(spec);
  if (a.orient != "none") {
    if (std::holds_alternative<okf::OrientedGraph>(g)) {
      throw okf::ParameterError("family '" + a.family + "' is already oriented");
    }
    const okf::Graph& u = std::get<okf::Graph>(g);
    if (a.orient == "forward") {
      g = okf::forward_orientation(u);
    } else if (a.orient == "reverse") {
      g = okf::reversal(okf::forward_orientation(u));
    } else if (a.orient == "alternating") {
      g = okf::alternating_orientation(u);
    } else if (a.orient == "balanced") {
      g = okf::balanced_orientation(u);
    } else if (a.orient == "random") {
      g = okf::random_orientation(u, a.seed);
    } else {
      throw okf::ParameterError("unknown orientation '" + a.orient + "'");
    }
  }
  if (!a.output.empty()) {
    okf::write_graph_file(a.output, g);
  }
  json j;
  std::string text;
  if (const auto* d = std::get_if<okf::OrientedGraph>(&g)) {
    j = okf::to_json(*d);
    text = okf::format_dg(*d);
  } else {
    j = okf::to_json(std::get<okf::Graph>(g));
    text = okf::format_ug(std::get<okf::Graph>(g));
  }
  if (!a.output.empty()) {
    j = {{"written", a.output}, {"graph", j}};
    text = "wrote " + a.output + "\n";
  }
  emit(gl, j, text);
  return kOk;
}

// ------------------------------------------------------------------ solve

struct SolveArgs {
  std::string problem;
  std::string file;
  int k = 1;
  bool strict_induced = false;
};

int run_solve(const Globals& gl, const SolveArgs& a) {
  const okf::AnyGraph input = okf::read_graph_file(a.file);
  const json params = {{"file", a.file}, {"k", a.k}};
  if (a.problem == "fk") {
    const auto d = need_oriented(input, "fk");
    const auto r = okf::min_forcing_number(d, a.k);
    emit(gl, okf::solve_json("fk", params, r),
         "value: " + std::to_string(r.value) + "\nwitness: " + set_text(r.witness) +
             "\nexplored: " + std::to_string(r.explored) + "\n");
    return kOk;
  }
  if (a.problem == "mof" || a.problem == "MOF") {
    okf::ExtremeOptions eo;
    eo.threads = gl.threads;
    const auto g = need_graph(input);
    const auto r = a.problem == "mof" ? okf::min_oriented_forcing_number(g, a.k, eo)
                                      : okf::max_oriented_forcing_number(g, a.k, eo);
    emit(gl, okf::solve_json(a.problem, params, r),
         "value: " + std::to_string(r.value) + "\norientation: " + r.orientation.bit_string() +
             "\nwitness: " + set_text(r.witness) + "\nexplored: " + std::to_string(r.explored) + "\n");
    return kOk;
  }
  okf::InvariantValue v;
  if (a.problem == "alpha") {
    v = okf::independence_number(need_graph(input));
  } else if (a.problem == "clique") {
    v = okf::clique_number(need_graph(input));
  } else if (a.problem == "matching") {
    v = okf::matching_number(need_graph(input));
  } else if (a.problem == "mim") {
    v = okf::induced_matching_number(need_graph(input));
  } else if (a.problem == "rho") {
    v = okf::path_cover_number(need_graph(input));
  } else if (a.problem == "treecover") {
    v = okf::tree_cover_number(need_graph(input), a.k);
  } else if (a.problem == "itcover") {
    v = okf::induced_kary_cover_number(need_oriented(input, "itcover"), a.k, a.strict_induced);
  } else {
    throw okf::ParameterError("unknown problem '" + a.problem + "'");
  }
  json j = {{"problem", a.problem}, {"parameters", params}, {"value", v.value}, {"witness", okf::to_json(v)}};
  std::string text = "value: " + std::to_string(v.value) + "\n";
  if (v.witness.universe() > 0) text += "witness: " + set_text(v.witness) + "\n";
  if (!v.matching.empty()) {
    text += "matching:";
    for (const auto& e : v.matching) text += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
    text += "\n";
  }
  if (!v.cover.empty()) text += "cover:\n" + cover_text(v.cover);
  emit(gl, j, text);
  return kOk;
}

// ------------------------------------------------------------------ force

struct ForceArgs {
  std::string file;
  std::string set;
  int k = 1;
  bool trace = false;
};

int run_force(const Globals& gl, const ForceArgs& a) {
  const auto d = need_oriented(okf::read_graph_file(a.file), "force");
  const auto s = okf::VertexSet::from_list(d.order(), parse_list(a.set));
  const auto t = okf::closure(d, s, a.k);
  const bool forcing = t.final_set.count() == d.order();
  json j = {{"forcing", forcing}, {"final", okf::to_json(t.final_set)}, {"rounds", t.rounds.size()}};
  std::string text = std::string("forcing: ") + (forcing ? "yes" : "no") + "\nfinal: " + set_text(t.final_set) + "\n";
  if (a.trace) {
    j["trace"] = okf::to_json(t);
    text += okf::trace_to_text(t);
    if (forcing) {
      const auto f = okf::forcing_chains(d, s, a.k);
      j["chains"] = okf::to_json(f);
      text += "chains: " + std::to_string(f.component_count()) + "\n";
    }
  }
  emit(gl, j, text);
  return kOk;
}

// ------------------------------------------------------------------ bound

struct BoundArgs {
  std::string kind;
  std::string file;
  int k = 1;
  std::string policy = "first";
  int root = 0;
  int induced_cap = 6;
};

std::string report_text(const okf::BoundReport& r) {
  std::string out;
  for (const auto& e : r) {
    out += e.name + " [" + e.side + " " + e.target + "] ";
    out += e.applicable ? e.value.to_string() : std::string("n/a");
    out += "  (" + e.reason + ")  " + e.anchor + "\n";
  }
  return out;
}

int run_bound(const Globals& gl, const BoundArgs& a) {
  const okf::AnyGraph input = okf::read_graph_file(a.file);
  if (a.kind == "greedy") {
    const auto d = need_oriented(input, "bound greedy");
    okf::GreedyOptions go;
    if (a.policy == "first") {
      go.policy = okf::RootPolicy::First;
    } else if (a.policy == "min-out") {
      go.policy = okf::RootPolicy::MinOutDegree;
    } else if (a.policy == "vertex") {
      go.policy = okf::RootPolicy::Vertex;
      go.root = a.root;
    } else {
      throw okf::ParameterError("unknown root policy '" + a.policy + "'");
    }
    const auto c = okf::greedy_forcing_set(d, a.k, go);
    std::string text = "set: " + set_text(c.set) + "\nsize: " + std::to_string(c.set.count()) +
                       "\nbound (" + c.bound_name + "): " + c.bound.to_string() + "\nroots:";
    for (int r : c.roots) text += " " + std::to_string(r);
    text += "\n";
    for (const auto& r : c.repairs) {
      text += "repair at " + std::to_string(r.vertex) + ":";
      for (int w : r.colored) text += " " + std::to_string(w);
      text += "\n";
    }
    emit(gl, okf::to_json(c), text);
    return kOk;
  }
  if (a.kind == "report") {
    okf::BoundReport r;
    if (const auto* d = std::get_if<okf::OrientedGraph>(&input)) {
      r = okf::forcing_bound_report(*d, a.k);
    } else {
      okf::ExtremalOptions eo;
      eo.induced_subgraph_cap = a.induced_cap;
      r = okf::extremal_bound_report(std::get<okf::Graph>(input), a.k, eo);
    }
    emit(gl, okf::to_json(r), report_text(r));
    return kOk;
  }
  throw okf::ParameterError("unknown bound kind '" + a.kind + "' (expected greedy or report)");
}

// ------------------------------------------------------------------ construct

struct ConstructArgs {
  std::string kind;
  std::string file;
  std::string set;
  std::string cover;
  int k = 1;
  std::string output;
};

int run_construct(const Globals& gl, const ConstructArgs& a) {
  const auto g = need_graph(okf::read_graph_file(a.file));
  okf::OrientedGraph d;
  json extra = json::object();
  std::string text;
  if (a.kind == "balanced") {
    d = okf::balanced_orientation(g);
  } else if (a.kind == "away-from") {
    okf::VertexSet s = a.set.empty() ? okf::independence_number(g).witness
                                     : okf::VertexSet::from_list(g.order(), parse_list(a.set));
    d = okf::orient_away_from(g, s);
    extra["set"] = okf::to_json(s);
    text += "set: " + set_text(s) + "\n";
  } else if (a.kind == "tree-cover") {
    std::vector<okf::CoverPart> cover;
    if (a.cover.empty()) {
      cover = okf::tree_cover_number(g, a.k).cover;
    } else {
      std::ifstream in(a.cover);
      if (!in) throw okf::ParameterError("cannot open " + a.cover);
      cover = okf::cover_from_json(json::parse(in));
    }
    const auto t = okf::tree_cover_orientation(g, cover, a.k);
    d = t.orientation;
    const bool forcing = okf::is_forcing_set(d, t.roots, a.k);
    extra = okf::to_json(t);
    extra["roots_force"] = forcing;
    extra["cover"] = okf::to_json(cover);
    text += "roots: " + set_text(t.roots) + " (" + (forcing ? "forcing" : "NOT forcing") + ")\n";
  } else {
    throw okf::ParameterError("unknown construction '" + a.kind + "'");
  }
  if (!a.output.empty()) okf::write_graph_file(a.output, d);
  extra["orientation"] = okf::to_json(d);
  text += a.output.empty() ? okf::format_dg(d) : "wrote " + a.output + "\n";
  emit(gl, extra, text);
  return kOk;
}

// ------------------------------------------------------------------ verify / scan

struct VerifyArgs {
  std::string suite = "all";
  okf::SuiteOptions options;
};

int run_verify(const Globals& gl, VerifyArgs a) {
  a.options.threads = gl.threads;
  std::vector<std::string> ids;
  if (a.suite != "all") {
    std::stringstream ss(a.suite);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (!id.empty()) ids.push_back(id);
    }
  }
  const auto start = std::chrono::steady_clock::now();
  auto results = okf::run_suite(ids, a.options);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = true;
  json checks = json::array();
  std::string text;
  for (auto& r : results) {
    ok = ok && r.passed();
    if (!gl.timing) r.runtime = 0.0;
    checks.push_back(okf::to_json(r));
    text += r.id + (r.passed() ? " PASS" : " FAIL") + " instances=" + std::to_string(r.instances) +
            " skipped=" + std::to_string(r.skipped) + " violations=" + std::to_string(r.violation_count);
    if (r.needs_exhibit) text += " exhibits=" + std::to_string(r.exhibits.size());
    if (gl.timing) {
      std::ostringstream t;
      t.precision(3);
      t << std::fixed << r.runtime;
      text += " time=" + t.str() + "s";
    }
    text += "\n";
    for (const auto& v : r.violations) text += "  violation: " + v.observed + "  " + v.instance + "\n";
    for (const auto& e : r.exhibits) text += "  exhibit: " + e.observed + "  " + e.instance + "\n";
  }
  text += ok ? "all checks passed\n" : "violations found\n";
  json j = {{"checks", checks}, {"passed", ok}};
  j["wall_time"] = gl.timing ? wall : 0.0;
  emit(gl, j, text);
  return ok ? kOk : kViolations;
}

struct ScanArgs {
  std::string problem;
  okf::ScanOptions options;
  bool records = false;
};

int run_scan(const Globals& gl, ScanArgs a) {
  a.options.threads = gl.threads;
  const auto r = okf::scan(a.problem, a.options);
  std::string text = "problem: " + r.problem + "\nuniverse: " + r.universe + "\ninstances: " +
                     std::to_string(r.records.size()) + "\n";
  for (const auto& note : r.notes) text += note + "\n";
  for (const auto& c : r.counterexamples) {
    text += "counterexample: MOF_" + std::to_string(c.k) + " = " + std::to_string(c.value) + ", threshold " +
            std::to_string(c.threshold) + "  " + okf::to_json(c.graph).dump() + "\n";
  }
  if (a.records) {
    for (const auto& rec : r.records) {
      text += (rec.satisfied ? "  ok  " : "  NO  ") + okf::to_json(rec.graph).dump() + " k=" + std::to_string(rec.k) +
              " MOF=" + std::to_string(rec.value) + "\n";
    }
  }
  text += r.verdict + "\n";
  emit(gl, okf::to_json(r, a.records), text);
  return kOk;
}

// ------------------------------------------------------------------ dot

struct DotArgs {
  std::string file;
  std::string set;
};

int run_dot(const Globals&, const DotArgs& a) {
  const okf::AnyGraph g = okf::read_graph_file(a.file);
  std::visit(
      [&](const auto& x) {
        if (a.set.empty()) {
          std::cout << okf::to_dot(x);
        } else {
          const auto s = okf::VertexSet::from_list(x.order(), parse_list(a.set));
          std::cout << okf::to_dot(x, &s);
        }
      },
      g);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"okforce: oriented k-forcing solvers, bounds and verification"};
  app.require_subcommand(1);
  Globals gl;
  app.add_flag("--json", gl.json, "Emit JSON instead of text");
  app.add_option("--threads", gl.threads, "Worker threads")->check(CLI::PositiveNumber);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Omit run times so reports are byte-identical across runs");

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "Generate a named graph family");
  c_gen->add_option("family", gen.family,
                    "path | cycle | star | complete | complete_bipartite | greedy_tree | gp_graph | gnp")
      ->required();
  c_gen->add_option("params", gen.params, "Integer parameters of the family");
  c_gen->add_option("--orient", gen.orient, "none | forward | reverse | alternating | balanced | random");
  c_gen->add_option("--p", gen.p, "Edge probability (gnp)");
  c_gen->add_option("--seed", gen.seed, "Seed (gnp, random orientation)");
  c_gen->add_option("-o,--output", gen.output, "Write to a .ug or .dg file");

  SolveArgs solve;
  auto* c_solve = app.add_subcommand("solve", "Exact forcing numbers and graph invariants");
  c_solve->add_option("problem", solve.problem, "fk | mof | MOF | alpha | rho | treecover | itcover | matching | mim | clique")
      ->required();
  c_solve->add_option("file", solve.file, "Input .ug or .dg file")->required();
  c_solve->add_option("--k", solve.k, "k")->check(CLI::PositiveNumber);
  c_solve->add_flag("--strict-induced", solve.strict_induced, "itcover: blocks must induce their tree");

  ForceArgs force;
  auto* c_force = app.add_subcommand("force", "Run the k-forcing process from a set");
  c_force->add_option("file", force.file, "Input .dg file")->required();
  c_force->add_option("--set", force.set, "Comma-separated initial vertices")->required();
  c_force->add_option("--k", force.k, "k")->check(CLI::PositiveNumber);
  c_force->add_flag("--trace", force.trace, "Print every round and the chain forest");

  BoundArgs bound;
  auto* c_bound = app.add_subcommand("bound", "Greedy certificate or bound report");
  c_bound->add_option("kind", bound.kind, "greedy | report")->required();
  c_bound->add_option("file", bound.file, "Input file (.dg for greedy; .dg or .ug for report)")->required();
  c_bound->add_option("--k", bound.k, "k")->check(CLI::PositiveNumber);
  c_bound->add_option("--root-policy", bound.policy, "greedy roots: first | min-out | vertex");
  c_bound->add_option("--root", bound.root, "root for --root-policy vertex");
  c_bound->add_option("--induced-cap", bound.induced_cap, "largest induced subgraph swept by the report");

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "Build an orientation from a construction");
  c_construct->add_option("kind", construct.kind, "balanced | away-from | tree-cover")->required();
  c_construct->add_option("file", construct.file, "Input .ug file")->required();
  c_construct->add_option("--set", construct.set, "away-from: independent set (default: a maximum one)");
  c_construct->add_option("--cover", construct.cover, "tree-cover: JSON cover file (default: an optimal cover)");
  c_construct->add_option("--k", construct.k, "k")->check(CLI::PositiveNumber);
  c_construct->add_option("-o,--output", construct.output, "Write the orientation to a .dg file");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Run the check catalog");
  c_verify->add_option("--suite", verify.suite, "Comma-separated check ids, or all");
  c_verify->add_option("--nmax", verify.options.nmax, "Largest labeled graph order (at most 6)");
  c_verify->add_option("--tree-nmax", verify.options.tree_nmax, "Largest labeled tree order (at most 9)");
  c_verify->add_option("--seed", verify.options.seed, "Seed for random orientations");
  c_verify->add_option("--random-cases", verify.options.random_cases, "Number of random orientations");
  bool list_checks = false;
  c_verify->add_flag("--list", list_checks, "List the catalog and exit");

  ScanArgs scan;
  auto* c_scan = app.add_subcommand("scan", "Search small graphs for counterexamples to an open problem");
  c_scan->add_option("--problem", scan.problem, "p1 | p2 | p3 | p4")->required();
  c_scan->add_option("--nmax", scan.options.nmax, "Largest order");
  c_scan->add_flag("--trees", scan.options.trees, "Scan labeled trees instead of connected graphs");
  c_scan->add_option("--k", scan.options.k, "p1: fixed k (default: every k up to Delta)");
  c_scan->add_flag("--records", scan.records, "Print every record");

  DotArgs dot;
  auto* c_dot = app.add_subcommand("dot", "Export a graph file as DOT");
  c_dot->add_option("file", dot.file, "Input .ug or .dg file")->required();
  c_dot->add_option("--set", dot.set, "Vertices drawn filled");

  app.fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  gl.timing = !no_timing;

  try {
    if (*c_gen) return run_gen(gl, gen);
    if (*c_solve) return run_solve(gl, solve);
    if (*c_force) return run_force(gl, force);
    if (*c_bound) return run_bound(gl, bound);
    if (*c_construct) return run_construct(gl, construct);
    if (*c_verify) {
      if (list_checks) {
        json j = json::array();
        std::string text;
        for (const auto& s : okf::check_catalog()) {
          j.push_back({{"id", s.id}, {"title", s.title}, {"anchor", s.anchor}, {"universe", s.universe},
                       {"needs_exhibit", s.needs_exhibit}});
          text += s.id + "  " + s.title + "\n      " + s.anchor + "\n";
        }
        emit(gl, j, text);
        return kOk;
      }
      return run_verify(gl, verify);
    }
    if (*c_scan) return run_scan(gl, scan);
    if (*c_dot) return run_dot(gl, dot);
  } catch (const okf::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const okf::LimitError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kUsage;
  } catch (const okf::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kUsage;
  } catch (const okf::Inapplicable& e) {
    std::cerr << "inapplicable: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
