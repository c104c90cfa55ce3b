#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splitcircle/catalog.hpp"
#include "splitcircle/chord.hpp"
#include "splitcircle/error.hpp"
#include "splitcircle/graph.hpp"
#include "splitcircle/oracle.hpp"
#include "splitcircle/recognize.hpp"

namespace py = pybind11;
namespace sc = splitcircle;

namespace {

sc::ChordModel model_from_word(const std::vector<int>& word) {
  sc::ChordModel m;
  m.word = word;
  sc::validate_model(m);
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Circle graph recognition for split graphs";

  py::register_exception<sc::Error>(m, "Error", PyExc_ValueError);

  py::class_<sc::Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("n", &sc::Graph::n)
      .def("adjacent", &sc::Graph::adjacent)
      .def("add_edge", &sc::Graph::add_edge)
      .def("edges", &sc::Graph::edges)
      .def("neighbors", &sc::Graph::neighbor_list)
      .def("edge_count", &sc::Graph::edge_count)
      .def("__eq__", [](const sc::Graph& a, const sc::Graph& b) { return a == b; })
      .def("__str__", &sc::format_graph)
      .def("__repr__", [](const sc::Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", edges=" + std::to_string(g.edge_count()) +
               ")";
      });

  m.def("parse_graph", &sc::parse_graph, py::arg("text"));
  m.def("local_complement", &sc::local_complement, py::arg("graph"), py::arg("vertex"));
  m.def("are_isomorphic", &sc::are_isomorphic);
  m.def("is_split_graph", &sc::is_split_graph);

  m.def(
      "recognize_json",
      [](const sc::Graph& g, bool build_model, bool find_witness) {
        sc::RecognizeOptions opts;
        opts.build_model = build_model;
        opts.find_witness = find_witness;
        sc::Verdict v;
        {
          py::gil_scoped_release release;
          v = sc::recognize(g, opts);
        }
        return sc::verdict_to_json(v);
      },
      py::arg("graph"), py::arg("build_model") = true, py::arg("find_witness") = true);

  m.def("interlacement",
        [](const std::vector<int>& word) { return sc::interlacement(model_from_word(word)); },
        py::arg("word"));
  m.def("render_svg",
        [](const std::vector<int>& word) { return sc::render_svg(model_from_word(word)); },
        py::arg("word"));

  m.def("oracle_is_circle", [](const sc::Graph& g) { return sc::oracle_is_circle(g); },
        py::arg("graph"));

  m.def("families", [] {
    std::vector<std::string> out;
    for (sc::FscFamily f : sc::all_fsc_families()) out.emplace_back(sc::to_string(f));
    return out;
  });
  m.def(
      "catalog_member",
      [](const std::string& family, int k) {
        return sc::make_fsc(sc::parse_fsc_family(family), k).graph;
      },
      py::arg("family"), py::arg("k") = 0);
  m.def("tent", &sc::tent_graph);
}
