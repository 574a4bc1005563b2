// Python bindings. Structured results cross the boundary as JSON and come back as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;

namespace {

py::object to_py(const okf::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

okf::VertexSet make_set(int n, const std::vector<int>& members) { return okf::VertexSet::from_list(n, members); }

okf::Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<okf::Edge> es;
  for (auto [u, v] : edges) es.push_back({u, v});
  return okf::Graph::from_edges(n, es);
}

okf::OrientedGraph make_oriented(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<okf::Arc> as;
  for (auto [t, h] : arcs) as.push_back({t, h});
  return okf::OrientedGraph::from_arcs(n, as);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "oriented k-forcing core";

  py::register_exception<okf::ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<okf::LimitError>(m, "LimitError", PyExc_ValueError);
  py::register_exception<okf::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<okf::Inapplicable>(m, "Inapplicable", PyExc_ValueError);

  py::class_<okf::Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &okf::Graph::order)
      .def_property_readonly("m", &okf::Graph::size)
      .def_property_readonly("edges",
                             [](const okf::Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("to_dict", [](const okf::Graph& g) { return to_py(okf::to_json(g)); })
      .def("__repr__", [](const okf::Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  py::class_<okf::OrientedGraph>(m, "OrientedGraph")
      .def(py::init(&make_oriented), py::arg("n"), py::arg("arcs"))
      .def_static(
          "from_bits", [](const okf::Graph& g, const std::string& bits) { return okf::orient(g, bits); },
          py::arg("graph"), py::arg("bits"))
      .def_property_readonly("n", &okf::OrientedGraph::order)
      .def_property_readonly("m", &okf::OrientedGraph::size)
      .def_property_readonly("bits", &okf::OrientedGraph::bit_string)
      .def_property_readonly("underlying", &okf::OrientedGraph::underlying)
      .def_property_readonly("arcs",
                             [](const okf::OrientedGraph& d) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& a : d.arcs()) out.emplace_back(a.tail, a.head);
                               return out;
                             })
      .def("reversal", [](const okf::OrientedGraph& d) { return okf::reversal(d); })
      .def("to_dict", [](const okf::OrientedGraph& d) { return to_py(okf::to_json(d)); })
      .def("__repr__", [](const okf::OrientedGraph& d) {
        return "OrientedGraph(n=" + std::to_string(d.order()) + ", bits=" + d.bit_string() + ")";
      });

  m.def(
      "generate",
      [](const std::string& family, const std::vector<int>& params, double p, std::uint64_t seed) -> py::object {
        okf::FamilySpec spec;
        spec.family = okf::family_from_name(family);
        spec.params = params;
        spec.p = p;
        spec.seed = seed;
        auto g = okf::generate(spec);
        if (auto* d = std::get_if<okf::OrientedGraph>(&g)) return py::cast(*d);
        return py::cast(std::get<okf::Graph>(g));
      },
      py::arg("family"), py::arg("params"), py::arg("p") = 0.5, py::arg("seed") = 0);
  m.def("forward_orientation", &okf::forward_orientation);
  m.def("alternating_orientation", &okf::alternating_orientation);
  m.def("random_orientation", &okf::random_orientation, py::arg("graph"), py::arg("seed"));

  m.def(
      "closure",
      [](const okf::OrientedGraph& d, const std::vector<int>& s, int k) {
        const auto t = okf::closure(d, make_set(d.order(), s), k);
        return to_py({{"rounds", okf::to_json(t)}, {"final", okf::to_json(t.final_set)}});
      },
      py::arg("digraph"), py::arg("set"), py::arg("k"));
  m.def(
      "closure_set",
      [](const okf::OrientedGraph& d, const std::vector<int>& s, int k) {
        return okf::closure_set(d, make_set(d.order(), s), k).members();
      },
      py::arg("digraph"), py::arg("set"), py::arg("k"));
  m.def(
      "is_forcing_set",
      [](const okf::OrientedGraph& d, const std::vector<int>& s, int k) {
        return okf::is_forcing_set(d, make_set(d.order(), s), k);
      },
      py::arg("digraph"), py::arg("set"), py::arg("k"));
  m.def(
      "forcing_chains",
      [](const okf::OrientedGraph& d, const std::vector<int>& s, int k) {
        return to_py(okf::to_json(okf::forcing_chains(d, make_set(d.order(), s), k)));
      },
      py::arg("digraph"), py::arg("set"), py::arg("k"));

  m.def(
      "forcing_number",
      [](const okf::OrientedGraph& d, int k) {
        return to_py(okf::solve_json("fk", {{"k", k}}, okf::min_forcing_number(d, k)));
      },
      py::arg("digraph"), py::arg("k"));
  m.def(
      "min_oriented_forcing_number",
      [](const okf::Graph& g, int k, int threads) {
        okf::ExtremeOptions eo;
        eo.threads = threads;
        return to_py(okf::solve_json("mof", {{"k", k}}, okf::min_oriented_forcing_number(g, k, eo)));
      },
      py::arg("graph"), py::arg("k"), py::arg("threads") = 1);
  m.def(
      "max_oriented_forcing_number",
      [](const okf::Graph& g, int k, int threads) {
        okf::ExtremeOptions eo;
        eo.threads = threads;
        return to_py(okf::solve_json("MOF", {{"k", k}}, okf::max_oriented_forcing_number(g, k, eo)));
      },
      py::arg("graph"), py::arg("k"), py::arg("threads") = 1);

  m.def("independence_number", [](const okf::Graph& g) { return to_py(okf::to_json(okf::independence_number(g))); });
  m.def("clique_number", [](const okf::Graph& g) { return to_py(okf::to_json(okf::clique_number(g))); });
  m.def("matching_number", [](const okf::Graph& g) { return to_py(okf::to_json(okf::matching_number(g))); });
  m.def("induced_matching_number",
        [](const okf::Graph& g) { return to_py(okf::to_json(okf::induced_matching_number(g))); });
  m.def("path_cover_number", [](const okf::Graph& g) { return to_py(okf::to_json(okf::path_cover_number(g))); });
  m.def(
      "tree_cover_number", [](const okf::Graph& g, int k) { return to_py(okf::to_json(okf::tree_cover_number(g, k))); },
      py::arg("graph"), py::arg("k"));
  m.def(
      "induced_kary_cover_number",
      [](const okf::OrientedGraph& d, int k, bool strict) {
        return to_py(okf::to_json(okf::induced_kary_cover_number(d, k, strict)));
      },
      py::arg("digraph"), py::arg("k"), py::arg("strict_induced") = false);

  m.def("balanced_orientation", &okf::balanced_orientation);
  m.def(
      "orient_away_from",
      [](const okf::Graph& g, const std::vector<int>& s) { return okf::orient_away_from(g, make_set(g.order(), s)); },
      py::arg("graph"), py::arg("independent_set"));
  m.def("is_reachable", &okf::is_reachable);
  m.def("is_strongly_reachable", &okf::is_strongly_reachable);
  m.def("min_reaching_set", [](const okf::OrientedGraph& d) { return to_py(okf::to_json(okf::min_reaching_set(d))); });

  m.def(
      "greedy_forcing_set",
      [](const okf::OrientedGraph& d, int k, const std::string& policy, int root) {
        okf::GreedyOptions go;
        if (policy == "first") {
          go.policy = okf::RootPolicy::First;
        } else if (policy == "min-out") {
          go.policy = okf::RootPolicy::MinOutDegree;
        } else if (policy == "vertex") {
          go.policy = okf::RootPolicy::Vertex;
          go.root = root;
        } else {
          throw okf::ParameterError("unknown root policy '" + policy + "'");
        }
        return to_py(okf::to_json(okf::greedy_forcing_set(d, k, go)));
      },
      py::arg("digraph"), py::arg("k"), py::arg("policy") = "first", py::arg("root") = 0);
  m.def(
      "forcing_bound_report",
      [](const okf::OrientedGraph& d, int k) { return to_py(okf::to_json(okf::forcing_bound_report(d, k))); },
      py::arg("digraph"), py::arg("k"));
  m.def(
      "extremal_bound_report",
      [](const okf::Graph& g, int k) { return to_py(okf::to_json(okf::extremal_bound_report(g, k))); },
      py::arg("graph"), py::arg("k"));

  m.def("parse_ug", &okf::parse_ug);
  m.def("parse_dg", &okf::parse_dg);
  m.def("format_ug", &okf::format_ug);
  m.def("format_dg", &okf::format_dg);

  m.def(
      "verify",
      [](const std::vector<std::string>& ids, int nmax, std::uint64_t seed, int random_cases) {
        okf::SuiteOptions o;
        o.nmax = nmax;
        o.seed = seed;
        o.random_cases = random_cases;
        okf::json out = okf::json::array();
        for (const auto& r : okf::run_suite(ids, o)) out.push_back(okf::to_json(r));
        return to_py(out);
      },
      py::arg("ids") = std::vector<std::string>{}, py::arg("nmax") = 4, py::arg("seed") = 1,
      py::arg("random_cases") = 100);
}
