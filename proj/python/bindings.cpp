// Copyright 2026 The spreadlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spreadlab/constructions.hpp"
#include "spreadlab/decomposition.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/families.hpp"
#include "spreadlab/solvers.hpp"
#include "spreadlab/spreading.hpp"
#include "spreadlab/theory.hpp"

namespace py = pybind11;
using namespace spreadlab;

namespace {

SpreadParams params_of(int p, std::optional<int> q) {
  return q ? SpreadParams(p, *q) : SpreadParams(p, WhiteLimit::infinity());
}

VertexSet set_of(const std::vector<Vertex>& vs) { return VertexSet(vs); }

py::dict labeled(const LabeledGraph& lg) {
  py::dict d;
  d["graph"] = lg.graph;
  d["labels"] = lg.labels;
  d["name"] = lg.display_name();
  return d;
}

py::dict solve_dict(const SolveResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["witness"] = r.witness.members();
  d["exact"] = r.exact;
  d["lower"] = r.lower;
  d["upper"] = r.upper;
  d["nodes_explored"] = r.nodes_explored;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "(p,q)-spreading on graphs";

  // Translators run newest first, so the base class goes in first.
  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<GraphClassError>(m, "GraphClassError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             if (!g.has_vertex(v)) throw InvalidArgument("vertex out of range");
             auto s = g.neighbors(v);
             return std::vector<Vertex>(s.begin(), s.end());
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); });
  m.def("to_edge_list", &to_edge_list);
  m.def("is_cubic", &is_cubic);
  m.def("is_claw_free", &is_claw_free);
  m.def("is_connected", &is_connected);

  m.def("diamond_necklace", [](int k) { return labeled(diamond_necklace(k)); });
  m.def("triangle_necklace", [](int k) { return labeled(triangle_necklace(k)); });
  m.def("triangle_diamond_necklace", [](int k) { return labeled(triangle_diamond_necklace(k)); });
  m.def("figure6_graph", [] { return labeled(figure6_graph()); });
  m.def("random_claw_free_cubic",
        [](int t, int d, std::uint64_t seed) { return labeled(random_claw_free_cubic(t, d, seed)); },
        py::arg("triangles"), py::arg("diamonds"), py::arg("seed"));

  m.def("unit_count", &unit_count);
  m.def("classify_family", [](const Graph& g) { return classify_family(g).name(); });
  m.def("units", [](const Graph& g) {
    std::vector<std::pair<std::string, std::vector<Vertex>>> out;
    const auto partition = delta_d_partition(g);
    for (const auto& u : partition.units()) out.emplace_back(to_string(u.kind), u.vertices.members());
    return out;
  });

  m.def("closure",
        [](const Graph& g, const std::vector<Vertex>& s, int p, std::optional<int> q) {
          return closure(g, set_of(s), params_of(p, q)).blue.members();
        },
        py::arg("graph"), py::arg("blue"), py::arg("p"), py::arg("q") = py::none());
  m.def("is_spreading_set",
        [](const Graph& g, const std::vector<Vertex>& s, int p, std::optional<int> q) {
          return is_spreading_set(g, set_of(s), params_of(p, q));
        },
        py::arg("graph"), py::arg("blue"), py::arg("p"), py::arg("q") = py::none());

  m.def("sigma_exact",
        [](const Graph& g, int p, std::optional<int> q, std::int64_t budget) {
          SolveOptions o;
          o.node_budget = budget;
          const auto params = params_of(p, q);
          SolveResult r;
          {
            py::gil_scoped_release release;
            r = sigma_exact(g, params, o);
          }
          return solve_dict(r);
        },
        py::arg("graph"), py::arg("p"), py::arg("q") = py::none(),
        py::arg("budget") = SolveOptions{}.node_budget);
  m.def("independence_number", [](const Graph& g) {
    auto r = independence_number(g);
    return std::make_pair(r.value, r.witness.members());
  });
  m.def("vertex_cover_number", [](const Graph& g) { return vertex_cover_number(g).value; });

  m.def("construct", [](const Graph& g, const std::string& method) {
    auto r = construct(g, method);
    py::dict d;
    d["set"] = r.set.members();
    d["formula"] = r.claimed_size_formula;
    d["claimed_size"] = r.claimed_size;
    d["validated"] = r.validated;
    d["log"] = r.log;
    return d;
  });

  m.def("predict",
        [](const Graph& g, int p, std::optional<int> q) {
          auto r = predict(g, params_of(p, q));
          py::dict d;
          d["kind"] = to_string(r.kind);
          d["display"] = r.to_string();
          d["provenance"] = r.provenance;
          return d;
        },
        py::arg("graph"), py::arg("p"), py::arg("q") = py::none());
  m.def("verify",
        [](const Graph& g, int p, std::optional<int> q) {
          auto r = verify(g, params_of(p, q));
          py::dict d;
          d["verdict"] = to_string(r.verdict);
          d["value"] = r.value;
          d["prediction"] = r.prediction.to_string();
          d["attained"] = r.attained;
          return d;
        },
        py::arg("graph"), py::arg("p"), py::arg("q") = py::none());
}
