#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "sparsecut/census.hpp"
#include "sparsecut/connectivity.hpp"
#include "sparsecut/error.hpp"
#include "sparsecut/families.hpp"
#include "sparsecut/io.hpp"
#include "sparsecut/report_json.hpp"
#include "sparsecut/witness.hpp"

namespace py = pybind11;
namespace sc = sparsecut;

namespace {

// Reports cross the boundary as plain dicts built from the JSON documents,
// so Python sees exactly the CLI's schema.
py::object to_python(const sc::Json& j) {
  switch (j.type()) {
    case sc::Json::value_t::null: return py::none();
    case sc::Json::value_t::boolean: return py::bool_(j.get<bool>());
    case sc::Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case sc::Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case sc::Json::value_t::number_float: return py::float_(j.get<double>());
    case sc::Json::value_t::string: return py::str(j.get<std::string>());
    case sc::Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_python(item));
      return out;
    }
    case sc::Json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = to_python(value);
      return out;
    }
    default: throw std::runtime_error("unsupported JSON value");
  }
}

sc::Graph make_graph(int order, const std::vector<std::pair<int, int>>& edges) {
  std::vector<sc::Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v});
  return sc::Graph::from_edges(order, list);
}

sc::CensusSource census_source(std::optional<int> order, std::optional<int> max_size, int min_size,
                               const std::optional<std::string>& graph6_lines, int default_max) {
  if (graph6_lines) {
    std::istringstream in(*graph6_lines);
    return sc::graph6_source(in);
  }
  if (!order) throw py::value_error("give either order or graph6_lines");
  return sc::builtin_source(*order, max_size.value_or(default_max), min_size);
}

int theorem_bound(sc::Theorem t, int n) {
  return t == sc::Theorem::T3 ? sc::independent_size_bound(n) : sc::foresty_size_bound(n);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vertex connectivity, minimum vertex cuts and sparse-graph witness search";

  static py::exception<sc::Error> error(m, "SparsecutError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const sc::Error& e) {
      py::tuple args = py::make_tuple(std::string(sc::to_string(e.code())), e.what());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::class_<sc::Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("order"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_static("from_graph6", [](const std::string& s) { return sc::from_graph6(s); })
      .def_static("from_edge_list", [](const std::string& s) { return sc::from_edge_list(s); })
      .def("to_graph6", [](const sc::Graph& g) { return sc::to_graph6(g); })
      .def("to_edge_list", [](const sc::Graph& g) { return sc::to_edge_list(g); })
      .def_property_readonly("order", &sc::Graph::order)
      .def_property_readonly("size", &sc::Graph::size)
      .def("edges",
           [](const sc::Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (auto [u, v] : g.edges()) out.push_back({u, v});
             return out;
           })
      .def("adjacent",
           [](const sc::Graph& g, int u, int v) {
             if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw py::index_error("vertex out of range");
             return g.adjacent(u, v);
           })
      .def("degree",
           [](const sc::Graph& g, int v) {
             sc::check_vertex(g, v);
             return g.degree(v);
           })
      .def("__eq__", [](const sc::Graph& a, const sc::Graph& b) { return a == b; })
      .def("__repr__", [](const sc::Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  m.def("is_connected", &sc::is_connected);
  m.def("canonical_form", [](const sc::Graph& g) { return sc::canonical_form(g).graph6; });
  m.def("isomorphic", &sc::isomorphic);

  m.def("vertex_connectivity", [](const sc::Graph& g) { return to_python(sc::to_json(sc::vertex_connectivity(g))); });
  m.def("enumerate_minimum_cuts", [](const sc::Graph& g) {
    const auto cuts = sc::enumerate_minimum_cuts(g);
    return to_python(sc::minimum_cuts_json(cuts.front().cut.size(), cuts));
  });
  m.def("classify_cut", [](const sc::Graph& g, const std::vector<int>& s) {
    return to_python(sc::to_json(sc::classify_cut(g, sc::VertexSet::from_members(s))));
  });
  m.def("disjoint_paths", [](const sc::Graph& g, const std::vector<int>& s, const std::vector<int>& t, int k) {
    return sc::disjoint_paths(g, sc::VertexSet::from_members(s), sc::VertexSet::from_members(t), k);
  });
  m.def("cut_component_matching", [](const sc::Graph& g, const std::vector<int>& s, const std::vector<int>& h) {
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : sc::cut_component_matching(g, sc::VertexSet::from_members(s), sc::VertexSet::from_members(h)))
      out.push_back({a, b});
    return out;
  });

  auto cert = [](sc::WitnessCertificate (*fn)(const sc::Graph&)) {
    return [fn](const sc::Graph& g) { return to_python(sc::to_json(fn(g))); };
  };
  m.def("independent_min_cut_cubic", cert(&sc::independent_min_cut_cubic));
  m.def("foresty_min_cut_4regular", cert(&sc::foresty_min_cut_4regular));
  m.def("independent_min_cut_sparse", cert(static_cast<sc::WitnessCertificate (*)(const sc::Graph&)>(&sc::independent_min_cut_sparse)));
  m.def("foresty_min_cut_sparse", cert(static_cast<sc::WitnessCertificate (*)(const sc::Graph&)>(&sc::foresty_min_cut_sparse)));
  m.def("oracle_min_cut_with_property", [](const sc::Graph& g, const std::string& kind) {
    return to_python(sc::to_json(sc::oracle_min_cut_with_property(g, sc::parse_cut_kind(kind))));
  }, py::arg("graph"), py::arg("kind"));

  m.def("gen_family", [](const std::string& family, int n) { return sc::gen_family({sc::parse_family(family), n}); },
        py::arg("family"), py::arg("n") = 0);
  m.def("evaluate_sharpness", [](const std::string& family, int n) {
    return to_python(sc::to_json(sc::evaluate_sharpness({sc::parse_family(family), n})));
  }, py::arg("family"), py::arg("n") = 0);
  m.def("verify_sharpness", [](const std::string& family, int n) {
    return to_python(sc::to_json(sc::verify_sharpness({sc::parse_family(family), n})));
  }, py::arg("family"), py::arg("n") = 0);

  m.def("count_census", [](int order, int max_size, int min_size) {
    return sc::count_census(sc::builtin_source(order, max_size, min_size));
  }, py::arg("order"), py::arg("max_size"), py::arg("min_size") = 0);

  m.def("verify_theorem",
        [](const std::string& theorem, std::optional<int> order, std::optional<int> max_size,
           std::optional<std::string> graph6_lines, const std::string& mode, int workers) {
          const auto t = sc::parse_theorem(theorem);
          const auto source = census_source(order, max_size, 0, graph6_lines, order ? theorem_bound(t, *order) : 0);
          sc::CensusReport r;
          {
            py::gil_scoped_release release;
            r = sc::verify_theorem(source, t, sc::parse_mode(mode), {workers});
          }
          return to_python(sc::to_json(r));
        },
        py::arg("theorem"), py::arg("order") = py::none(), py::arg("max_size") = py::none(),
        py::arg("graph6_lines") = py::none(), py::arg("mode") = "both", py::arg("workers") = 1);

  m.def("verify_lemma",
        [](const std::string& lemma, std::optional<int> order, std::optional<int> max_size, int min_size,
           std::optional<std::string> graph6_lines, int workers) {
          const auto l = sc::parse_lemma(lemma);
          const int full = order ? *order * (*order - 1) / 2 : 0;
          const auto source = census_source(order, max_size, min_size, graph6_lines, full);
          sc::CensusReport r;
          {
            py::gil_scoped_release release;
            r = sc::verify_lemma(source, l, {workers});
          }
          return to_python(sc::to_json(r));
        },
        py::arg("lemma"), py::arg("order") = py::none(), py::arg("max_size") = py::none(), py::arg("min_size") = 0,
        py::arg("graph6_lines") = py::none(), py::arg("workers") = 1);

  m.def("evaluate_sharp_frontier", [](const std::string& theorem, int order, int workers) {
    sc::CensusReport r;
    {
      py::gil_scoped_release release;
      r = sc::evaluate_sharp_frontier(order, sc::parse_theorem(theorem), {workers});
    }
    return to_python(sc::to_json(r));
  }, py::arg("theorem"), py::arg("order"), py::arg("workers") = 1);
}
