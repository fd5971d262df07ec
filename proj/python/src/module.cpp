#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gainbalance/balancetests.hpp"
#include "gainbalance/canon.hpp"
#include "gainbalance/classify.hpp"
#include "gainbalance/cli.hpp"
#include "gainbalance/io.hpp"
#include "gainbalance/report.hpp"

namespace py = pybind11;
using namespace gainbalance;

namespace {

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// results cross the boundary as JSON text; the Python side decodes them
std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](const std::string& text) { return parse_graph(text); }), py::arg("text"))
      .def_static("named", [](const std::string& tag) {
        auto spec = parse_named(tag);
        if (!spec) throw std::invalid_argument("unknown named graph '" + tag + "'");
        return build_named(*spec);
      })
      .def_static("load", &load_graph, py::arg("spec"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("cycle_rank", &Graph::cycle_rank)
      .def_property_readonly("vertices", &Graph::vertex_names)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const auto& e : g.edges())
                                 out.emplace_back(e.id, g.vertex_name(e.tail), g.vertex_name(e.head));
                               return out;
                             })
      .def("is_inseparable", &is_inseparable)
      .def("is_isomorphic", [](const Graph& a, const Graph& b) { return isomorphic(a, b); })
      .def("to_text", &format_graph)
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
               " edges>";
      });

  m.def(
      "classify",
      [](const Graph& g, const std::string& group_class, const std::string& test) {
        auto c = parse_group_class(group_class);
        if (test == "circle") return dump(verdict_json(circle_goodness(g, c)));
        if (test == "cycle") return dump(verdict_json(binary_cycle_goodness(g, c)));
        throw std::invalid_argument("test must be 'circle' or 'cycle'");
      },
      py::arg("graph"), py::arg("group_class") = "contains-z3", py::arg("test") = "circle");

  m.def(
      "has_minor",
      [](const Graph& g, const Graph& target, std::size_t max_states) -> std::optional<std::string> {
        MinorSearchLimits limits;
        limits.max_states = max_states;
        auto w = has_minor(g, target, limits);
        if (!w) return std::nullopt;
        return dump(minor_json(g, target, *w));
      },
      py::arg("graph"), py::arg("target"), py::arg("max_states") = MinorSearchLimits{}.max_states);

  m.def(
      "balance",
      [](const Graph& g, const std::string& gains) {
        GainGraph gg = make_gain_graph(g, parse_gains(gains, g));
        return dump(balance_json(g, is_balanced(gg)));
      },
      py::arg("graph"), py::arg("gains"));

  m.def(
      "circle_test",
      [](const Graph& g, const std::string& gains, const std::string& basis) {
        GainGraph gg = make_gain_graph(g, parse_gains(gains, g));
        return circle_test(gg, parse_basis(basis, g).members);
      },
      py::arg("graph"), py::arg("gains"), py::arg("basis"));

  m.def(
      "abelian_report",
      [](const Graph& g, const std::string& basis, const std::vector<std::string>& queries) {
        auto b = parse_basis(basis, g).oriented(g);
        std::vector<Circle> qs;
        for (const auto& q : queries) qs.push_back(circle_from_ids(g, words(q)));
        return dump(abelian_report_json(g, implies_balance_abelian(g, b, qs), qs));
      },
      py::arg("graph"), py::arg("basis"), py::arg("queries") = std::vector<std::string>{});

  m.def(
      "oracle",
      [](const Graph& g, const std::string& group, std::uint64_t max_assignments) {
        OracleOptions opts;
        opts.max_assignments = max_assignments;
        auto r = oracle_circle_goodness(g, parse_group(group), opts);
        Json j{{"good", r.good}, {"assignments", r.assignments}};
        j["counterexample"] = r.counterexample ? witness_json(*r.counterexample) : Json(nullptr);
        return dump(j);
      },
      py::arg("graph"), py::arg("group"), py::arg("max_assignments") = OracleOptions{}.max_assignments);

  m.def(
      "bad_witness",
      [](const std::string& tag, std::optional<std::int64_t> modulus) {
        auto spec = parse_named(tag);
        if (!spec) throw std::invalid_argument("unknown named graph '" + tag + "'");
        return dump(witness_json(bad_witness(*spec, modulus)));
      },
      py::arg("family"), py::arg("modulus") = py::none());

  m.def(
      "smith_invariants",
      [](const std::vector<std::vector<std::string>>& rows, std::size_t cols) {
        IntMatrix a;
        for (const auto& r : rows) {
          if (r.size() != cols) throw std::invalid_argument("matrix rows must all have the given length");
          std::vector<BigInt> row;
          for (const auto& x : r) row.emplace_back(x);
          a.push_back(std::move(row));
        }
        std::vector<std::string> out;
        for (const auto& d : smith_normal_form(a, cols).invariants) out.push_back(to_string(d));
        return out;
      },
      py::arg("rows"), py::arg("cols"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
