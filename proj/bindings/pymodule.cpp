#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dpsq/budget.hpp"
#include "dpsq/detect.hpp"
#include "dpsq/discharge.hpp"
#include "dpsq/dp.hpp"
#include "dpsq/enumerate.hpp"
#include "dpsq/errors.hpp"
#include "dpsq/generate.hpp"
#include "dpsq/graph.hpp"
#include "dpsq/iso.hpp"
#include "dpsq/mad.hpp"
#include "dpsq/rational.hpp"
#include "dpsq/reduce.hpp"

namespace py = pybind11;
using namespace dpsq;

namespace {

std::string status_word(LemmaReport::Status s) {
    switch (s) {
    case LemmaReport::Status::verified: return "verified";
    case LemmaReport::Status::refuted: return "refuted";
    default: return "budget";
    }
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "DP-coloring toolkit for squares of subcubic graphs";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def_readonly("n", &Graph::n)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("edge_count", &Graph::edge_count)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("build_graph", &build_graph, py::arg("n"), py::arg("edges"));
    m.def("square", &square, py::arg("g"));
    m.def("girth", [](const Graph& g) -> py::object {
        auto v = girth(g);
        if (!v) return py::none();
        return py::int_(*v);
    }, py::arg("g"));
    m.def("is_connected", &is_connected, py::arg("g"));
    m.def("is_subcubic", &is_subcubic, py::arg("g"));
    m.def("is_isomorphic", &is_isomorphic, py::arg("g"), py::arg("h"),
          py::arg("max_n") = 12);
    m.def("max_clique", &max_clique, py::arg("g"));

    m.def("generate", [](const std::string& name, const std::vector<int>& params) {
        Generated gen = generate(name, params);
        return py::make_tuple(gen.g, gen.boundary);
    }, py::arg("name"), py::arg("params") = std::vector<int>{});

    m.def("enumerate_subcubic", &enumerate_subcubic, py::arg("n"),
          py::arg("max_n") = 10);
    m.def("random_subcubic", &random_subcubic, py::arg("n"), py::arg("seed"),
          py::arg("min_degree") = 1);

    m.def("mad", [](const Graph& g) { return mad_exact(g).str(); }, py::arg("g"));
    m.def("girth_mad_bound", [](int g) { return girth_mad_bound(g).str(); },
          py::arg("g"));

    m.def("chromatic_number", &chromatic_number, py::arg("g"));
    m.def("dp_chromatic", [](const Graph& g) { return dp_chromatic(g); },
          py::arg("g"));
    m.def("is_dp_k_colorable", [](const Graph& g, int k) {
        return is_dp_k_colorable(g, k).colorable;
    }, py::arg("g"), py::arg("k"));

    m.def("detect_reducible", [](const Graph& g, int k) {
        std::vector<std::pair<std::string, std::vector<int>>> out;
        for (const auto& occ : detect_reducible(g, k))
            out.emplace_back(occ.kind, occ.vertices);
        return out;
    }, py::arg("g"), py::arg("k"));

    m.def("discharge_min", [](const Graph& g, const std::string& rule) {
        return min_final_charge(discharge(g, rule)).str();
    }, py::arg("g"), py::arg("rule"));

    m.def("audit_theorem", [](const Graph& g, int k) {
        TheoremAudit a = audit_theorem(g, k);
        py::dict d;
        d["k"] = a.k;
        d["rule"] = a.rule;
        d["applicable"] = a.applicable;
        d["bound"] = a.bound.str();
        d["min_final"] = a.min_final.str();
        d["mad"] = a.mad_value.str();
        d["passed"] = a.passed;
        d["note"] = a.note;
        return d;
    }, py::arg("g"), py::arg("k"));

    m.def("all_lemma_ids", &all_lemma_ids);
    m.def("verify_lemma", [](const std::string& id) {
        LemmaReport rep = verify_lemma(id);
        py::dict d;
        d["lemma_id"] = rep.lemma_id;
        d["status"] = status_word(rep.status);
        d["certificate"] = rep.certificate;
        d["n_covers"] = rep.n_covers;
        d["iso"] = rep.iso_note;
        return d;
    }, py::arg("lemma_id"));
}
