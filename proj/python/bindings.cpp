#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "ibound/certify.hpp"
#include "ibound/edge_polynomial.hpp"
#include "ibound/errors.hpp"
#include "ibound/independence.hpp"
#include "ibound/json_io.hpp"
#include "ibound/paley.hpp"
#include "ibound/search.hpp"
#include "ibound/subgraph.hpp"

namespace py = pybind11;
using namespace ibound;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default: return py::none();
  }
}

Json py_to_json(const py::handle& obj) { return Json::parse(py::str(py::module_::import("json").attr("dumps")(obj)).cast<std::string>()); }

WeightMatrix weights_from_entries(const Graph& g,
                                  const std::vector<std::tuple<int, int, std::string>>& entries) {
  WeightMatrix w(g);
  for (const auto& [u, v, value] : entries)
    w.set_weight(u, v, Rational::from_string(value));
  return w;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact inertia bounds and non-tightness certificates for graph "
            "independence numbers";

  py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("complement", &Graph::complement)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", edges=" +
               std::to_string(g.edge_count()) + ")";
      });

  m.def("paley", &paley, py::arg("q"), "Paley graph on a prime q = 1 (mod 4)");
  m.def("delete_vertex",
        [](const Graph& g, int v) { return delete_vertex(g, v).graph; }, py::arg("graph"),
        py::arg("v"), "delete a vertex and relabel contiguously");
  m.def("delete_edge", &delete_edge, py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def("triangles", [](const Graph& g) { return triangles(g); });

  m.def("alpha", [](const Graph& g) { return json_to_py(independence_to_json(independence_number(g))); },
        py::arg("graph"), "exact independence number with a witness");
  m.def("is_alpha_critical",
        [](const Graph& g) { return json_to_py(criticality_to_json(is_alpha_critical(g))); },
        py::arg("graph"));

  m.def("inertia",
        [](int n, const std::vector<std::tuple<int, int, std::string>>& entries) {
          SymMatrix mat(n);
          for (const auto& [i, j, value] : entries)
            mat.set(i, j, Rational::from_string(value));
          const Inertia in = inertia(mat);
          return py::make_tuple(in.n_plus, in.n_minus, in.n_zero);
        },
        py::arg("n"), py::arg("entries"),
        "exact inertia of the symmetric matrix with the given upper-triangle "
        "entries (rational strings)");

  m.def("inertia_bound",
        [](const Graph& g, const std::vector<std::tuple<int, int, std::string>>& entries) {
          return inertia_bound(g, weights_from_entries(g, entries));
        },
        py::arg("graph"), py::arg("entries"),
        "min(n - n+, n - n-) for the weight matrix with the given edge entries");

  m.def("symbolic_determinant",
        [](const Graph& g) { return symbolic_determinant(g).str(); }, py::arg("pattern"),
        "determinant of the generic weight matrix, as a readable polynomial");

  m.def("certify_not_tight",
        [](const Graph& g, int threads) {
          const Verdict verdict = certify_not_tight(g, threads);
          py::dict out;
          out["verdict"] = verdict.not_tight() ? "NOT_TIGHT" : "UNKNOWN";
          if (!verdict.not_tight()) out["reason"] = verdict.reason;
          if (verdict.certificate)
            out["certificate"] = json_to_py(certificate_to_json(*verdict.certificate));
          return out;
        },
        py::arg("graph"), py::arg("threads") = 1,
        "NOT_TIGHT with a machine-checkable certificate, or UNKNOWN with a reason");

  m.def("verify_certificate",
        [](const Graph& g, const py::dict& certificate) {
          const auto result = verify_certificate(g, certificate_from_json(py_to_json(certificate)));
          return py::make_tuple(result.ok, result.reason);
        },
        py::arg("graph"), py::arg("certificate"),
        "recheck a certificate from scratch; returns (ok, reason)");

  m.def("grid_search_circulant",
        [](int q, int lo, int hi, long budget, int threads) {
          const GridSearchResult result =
              grid_search_circulant(paley_params(q), lo, hi, budget, threads);
          Json j = search_report_to_json(result.best);
          j["evaluated"] = result.evaluated;
          j["partial"] = result.partial;
          return json_to_py(j);
        },
        py::arg("q"), py::arg("lo") = -32, py::arg("hi") = 32,
        py::arg("budget") = 20'000'000L, py::arg("threads") = 1);

  m.def("random_edge_search",
        [](const Graph& g, long iterations, std::uint64_t seed, bool hill_climb) {
          const int alpha = independence_number(g).alpha;
          return json_to_py(
              search_report_to_json(random_edge_search(g, alpha, iterations, seed, hill_climb)));
        },
        py::arg("graph"), py::arg("iterations") = 10000, py::arg("seed") = 1,
        py::arg("hill_climb") = false);
}
