#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bei/bms.hpp"
#include "bei/cas.hpp"
#include "bei/catalog.hpp"
#include "bei/cli.hpp"
#include "bei/corona.hpp"
#include "bei/cutsets.hpp"
#include "bei/error.hpp"
#include "bei/graph_io.hpp"
#include "bei/invariants.hpp"

namespace py = pybind11;
using namespace bei;

namespace {

VertexSet to_set(int universe, const std::vector<int>& members) {
  VertexSet s(universe);
  for (int v : members) {
    if (v < 0 || v >= universe) {
      throw Error(ErrorCode::invalid_vertex, "vertex " + std::to_string(v) + " out of range");
    }
    s.insert(v);
  }
  return s;
}

CoronaSpec make_spec(const Graph& base, const std::vector<int>& attach, const Graph& pendant) {
  return {base, to_set(base.order(), attach), pendant};
}

EnumerationOptions options(int bound, std::optional<int> size_cap, int jobs) {
  EnumerationOptions o;
  o.bound = bound;
  o.size_cap = size_cap;
  o.jobs = jobs;
  return o;
}

std::string invariants_json(const std::string& family, int n, int ell,
                            const std::optional<Graph>& pendant,
                            const std::optional<std::string>& base_json,
                            const std::optional<Graph>& b_graph, std::optional<int> r_extremal,
                            int bound) {
  EnumerationOptions o;
  o.bound = bound;
  if (pendant.has_value() == base_json.has_value()) {
    throw Error(ErrorCode::invalid_argument, "give exactly one of pendant and base");
  }
  BaseInvariants base = pendant ? base_invariants_for(*pendant, o) : base_invariants_from_json(*base_json);
  if (r_extremal) base.r_extremal = r_extremal;
  base.validate();
  const Graph* h = pendant ? &*pendant : nullptr;
  InvariantReport report;
  if (family == "l-corona" || family == "full-corona") {
    report = depth_reg_corona_complete(n, family == "full-corona" ? n : ell, base);
    if (h) cross_check_dimension(report, *h, o);
  } else if (family == "path") {
    report = depth_reg_corona_path(n, base, h, o);
  } else if (family == "cm-closed") {
    if (!b_graph) throw Error(ErrorCode::invalid_argument, "cm-closed needs b_graph");
    report = depth_reg_corona_cm_closed(*b_graph, base, h, o);
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown family '" + family + "'");
  }
  return to_json(report);
}

}  // namespace

PYBIND11_MODULE(_bei, m) {
  m.doc() = "Binomial edge ideals of corona products";

  static py::exception<Error> bei_error(m, "BeiError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = py::handle(bei_error.ptr())(e.what());
      instance.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(bei_error.ptr(), instance.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges,
                       std::vector<std::string> labels) {
             std::vector<Edge> e;
             for (auto [u, v] : edges) e.push_back({u, v});
             return Graph(n, e, std::move(labels));
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{},
           py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("labels", &Graph::labels)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
      .def("adjacent", &Graph::adjacent)
      .def("label", &Graph::label)
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__len__", &Graph::order)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) +
               ", graph6='" + to_graph6(g) + "')";
      });

  m.def("from_graph6", [](const std::string& s) { return from_graph6(s); });
  m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(std::string_view(s)); });
  m.def("to_edge_list", &to_edge_list);
  m.def("to_dot", [](const Graph& g, const std::string& name) { return to_dot(g, name); },
        py::arg("g"), py::arg("name") = "G");

  m.def("complete_graph", &complete_graph);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("star_graph", &star_graph);
  m.def("named_graph", [](const std::string& name) { return named_graph(name); });
  m.def("connected_graphs", &connected_graphs);
  m.def("diameter", &diameter);
  m.def("component_count", [](const Graph& g, const std::vector<int>& removed) {
    return component_count(g, to_set(g.order(), removed));
  }, py::arg("g"), py::arg("removed") = std::vector<int>{});

  py::class_<CutsetReport>(m, "CutsetReport")
      .def_property_readonly("cutsets",
                             [](const CutsetReport& r) {
                               std::vector<std::vector<int>> out;
                               for (const auto& t : r.cutsets) out.push_back(t.to_vector());
                               return out;
                             })
      .def_readonly("components", &CutsetReport::components)
      .def_readonly("unmixed", &CutsetReport::is_unmixed)
      .def_readonly("accessible_system", &CutsetReport::is_accessible_system)
      .def_property_readonly("accessible",
                             [](const CutsetReport& r) { return r.is_unmixed && r.is_accessible_system; })
      .def_readonly("dimension", &CutsetReport::oracle_dimension)
      .def_readonly("complete", &CutsetReport::complete)
      .def_readonly("disconnected_extension", &CutsetReport::disconnected_extension)
      .def_property_readonly("unmixed_witness", [](const CutsetReport& r) {
        return r.unmixed_witness ? std::optional(r.unmixed_witness->to_vector()) : std::nullopt;
      });

  m.def("enumerate_cutsets",
        [](const Graph& g, int bound, std::optional<int> size_cap, int jobs) {
          return enumerate_cutsets(g, options(bound, size_cap, jobs));
        },
        py::arg("g"), py::arg("bound") = 0, py::arg("size_cap") = std::nullopt, py::arg("jobs") = 0);
  m.def("is_cutset", [](const Graph& g, const std::vector<int>& t) {
    return is_cutset(g, to_set(g.order(), t));
  });
  m.def("is_unmixed", [](const Graph& g, int bound) { return is_unmixed(g, options(bound, {}, 0)); },
        py::arg("g"), py::arg("bound") = 0);
  m.def("is_accessible",
        [](const Graph& g, int bound) { return is_accessible(g, options(bound, {}, 0)); },
        py::arg("g"), py::arg("bound") = 0);
  m.def("dimension_oracle",
        [](const Graph& g, int bound) { return dimension_oracle(g, options(bound, {}, 0)); },
        py::arg("g"), py::arg("bound") = 0);
  m.def("accessibility_witness_chain", [](const Graph& g, const std::vector<int>& t) {
    return accessibility_witness_chain(g, to_set(g.order(), t));
  });

  m.def("l_corona", [](const Graph& base, const std::vector<int>& attach, const Graph& pendant) {
    return l_corona(make_spec(base, attach, pendant)).graph;
  });
  m.def("corona", [](const Graph& base, const Graph& pendant) { return corona(base, pendant).graph; });
  m.def("decompose_cutset", [](const Graph& base, const std::vector<int>& attach, const Graph& pendant,
                               const std::vector<int>& t) {
    const auto spec = make_spec(base, attach, pendant);
    const auto d = decompose_cutset(spec, to_set(l_corona(spec).graph.order(), t));
    py::dict out;
    out["t0"] = d.t0.to_vector();
    py::dict tv;
    for (const auto& [v, s] : d.tv) tv[py::int_(v)] = s.to_vector();
    out["tv"] = tv;
    out["nonempty"] = d.nonempty_set.to_vector();
    out["counted"] = d.counted_set.to_vector();
    out["predicted_components"] = d.predicted_components;
    return out;
  });
  m.def("check_cutset_structure", [](const Graph& base, const std::vector<int>& attach,
                                     const Graph& pendant, const std::vector<int>& t) {
    const auto spec = make_spec(base, attach, pendant);
    py::list out;
    for (const auto& v : check_cutset_structure(spec, to_set(l_corona(spec).graph.order(), t))) {
      py::dict d;
      d["assertion"] = v.index;
      d["holds"] = v.holds;
      d["applicable"] = v.applicable;
      d["detail"] = v.detail;
      out.append(d);
    }
    return out;
  });
  m.def("gadget_d2", &gadget_d2);
  m.def("gadget_d3", &gadget_d3);
  m.def("verify_reduction", [](const std::string& kind, const Graph& h) {
    if (kind != "d2" && kind != "d3") throw Error(ErrorCode::invalid_argument, "kind is d2 or d3");
    const auto c = kind == "d2" ? verify_reduction_d2(h) : verify_reduction_d3(h);
    py::dict out;
    out["gadget"] = c.gadget;
    out["diameter"] = c.diameter;
    out["diameter_ok"] = c.diameter_ok;
    out["accessible_transfer_ok"] = c.accessible_transfer_ok;
    out["distance_formula_ok"] = c.distance_formula_ok;
    out["printed_formula_exceptions"] = c.literal_formula_exceptions.size();
    return out;
  });

  m.def("_base_invariants_json", [](const Graph& g, int bound) {
    return to_json(base_invariants_for(g, options(bound, {}, 0)));
  });
  m.def("_invariants_json", &invariants_json, py::arg("family"), py::arg("n") = 0, py::arg("ell") = 0,
        py::arg("pendant") = std::nullopt, py::arg("base_json") = std::nullopt,
        py::arg("b_graph") = std::nullopt, py::arg("r_extremal") = std::nullopt,
        py::arg("bound") = 0);

  m.def("emit_cas_script", [](const Graph& g, const std::string& dialect) {
    auto d = parse_cas_dialect(dialect);
    if (!d) throw Error(ErrorCode::invalid_argument, "unknown dialect '" + dialect + "'");
    return emit_cas_script(g, *d);
  }, py::arg("g"), py::arg("dialect") = "m2");

  m.def("_scan", [](const std::string& corpus, const std::vector<int>& diameters,
                    std::optional<int> max_n, int jobs) {
    std::istringstream in(corpus);
    std::ostringstream out;
    std::ostringstream err;
    ScanOptions so;
    so.diameters = {diameters.begin(), diameters.end()};
    so.max_n = max_n;
    so.jobs = jobs;
    bms_scan(in, out, err, so);
    return std::make_pair(out.str(), err.str());
  });

  m.def("cli", [](const std::vector<std::string>& args, const std::string& stdin_text) {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run(args, in, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");
}
