// Python module nilgraph._core.

#include <sstream>  // for ostringstream
#include <string>   // for string
#include <vector>   // for vector

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilgraph/cayley_io.hpp"
#include "nilgraph/constructions.hpp"
#include "nilgraph/enumerate.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/nilpotency.hpp"
#include "nilgraph/report.hpp"
#include "nilgraph/semigroup.hpp"

namespace py = pybind11;
using namespace nilgraph;

namespace {
  std::vector<std::pair<std::size_t, std::size_t>> edges(FiniteSemigroup const& s,
                                                         std::string const&     kind) {
    return build_graph(s, parse_graph_kind(kind)).edges();
  }

  std::vector<std::vector<element_type>> rows(FiniteSemigroup const& s) {
    std::vector<std::vector<element_type>> out(s.size());
    for (element_type a = 0; a < s.size(); ++a) {
      for (element_type b = 0; b < s.size(); ++b) {
        out[a].push_back(s.product(a, b));
      }
    }
    return out;
  }
}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite semigroups, Malcev nilpotency and non-nilpotent graphs";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<NotAssociative>(m, "NotAssociative", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<OrderTooLarge>(m, "OrderTooLarge", error);

  py::class_<FiniteSemigroup>(m, "Semigroup")
      .def(py::init<std::vector<std::vector<element_type>> const&,
                    std::vector<std::string>>(),
           py::arg("table"), py::arg("labels") = std::vector<std::string>{})
      .def_static("parse",
                  [](std::string const& text) { return parse_cayley_table(text, "<string>"); })
      .def("__len__", &FiniteSemigroup::size)
      .def("product", &FiniteSemigroup::product)
      .def("label", &FiniteSemigroup::label)
      .def_property_readonly("labels", &FiniteSemigroup::labels)
      .def_property_readonly("table", &rows)
      .def("to_text", [](FiniteSemigroup const& s) { return to_cayley_text(s); })
      .def("__eq__", [](FiniteSemigroup const& a, FiniteSemigroup const& b) { return a == b; })
      .def("__repr__", [](FiniteSemigroup const& s) {
        return "<Semigroup of order " + std::to_string(s.size()) + ">";
      });

  m.def("fixture", [](std::string const& name) { return fixture(name); });
  m.def("fixture_names", &fixture_names);
  m.def("is_nilpotent", &is_malcev_nilpotent);
  m.def("nilpotency_class", &nilpotency_class);
  m.def("is_positively_engel", &is_positively_engel);
  m.def("is_neumann_taylor", &is_neumann_taylor);
  m.def("graph_edges", &edges, py::arg("semigroup"), py::arg("kind") = "upper");
  m.def(
      "graph_dot",
      [](FiniteSemigroup const& s, std::string const& kind) {
        return to_dot(build_graph(s, parse_graph_kind(kind)), kind);
      },
      py::arg("semigroup"), py::arg("kind") = "upper");
  m.def("analyze_json",
        [](FiniteSemigroup const& s) { return to_json(analyze(s, "<python>"), -1); });
  m.def(
      "count_semigroups",
      [](std::size_t n, std::string const& modulo) {
        py::gil_scoped_release release;
        return count_semigroups(n, parse_modulo(modulo));
      },
      py::arg("order"), py::arg("modulo") = "isoanti");
  m.def(
      "semigroups",
      [](std::size_t n, std::string const& modulo) {
        py::gil_scoped_release release;
        return all_semigroups(n, parse_modulo(modulo));
      },
      py::arg("order"), py::arg("modulo") = "isoanti");
}
