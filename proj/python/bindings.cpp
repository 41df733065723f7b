#include "reconf/errors.hpp"
#include "reconf/generate.hpp"
#include "reconf/io.hpp"
#include "reconf/oracle.hpp"
#include "reconf/reductions.hpp"
#include "reconf/split_solver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace reconf;

namespace {

ReconfigInstance make_instance(const Graph& g, int c, const std::string& rule, int threshold, VertexSet s, VertexSet t) {
    Rule r;
    if (rule == "ts")
        r = Rule::ts();
    else if (rule == "tj")
        r = Rule::tj();
    else if (rule == "tar")
        r = Rule::tar(threshold);
    else
        throw PreconditionError("rule must be ts, tj or tar");
    std::sort(s.begin(), s.end());
    std::sort(t.begin(), t.end());
    return {g, c, r, std::move(s), std::move(t)};
}

py::object witness_or_none(const std::optional<MoveSequence>& w) {
    if (!w) return py::none();
    return py::cast(*w);
}

}  // namespace

PYBIND11_MODULE(reconf, m) {
    m.doc() = "Colorable-set reconfiguration on split and chordal graphs";

    py::register_exception<Error>(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ResourceLimit& e) {
            PyErr_SetString(PyExc_MemoryError, e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
             py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors)
        .def("has_edge", &Graph::has_edge)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
        });

    py::enum_<MoveKind>(m, "MoveKind")
        .value("SLIDE", MoveKind::Slide)
        .value("JUMP", MoveKind::Jump)
        .value("ADD", MoveKind::Add)
        .value("REMOVE", MoveKind::Remove);

    py::class_<Move>(m, "Move")
        .def_readonly("kind", &Move::kind)
        .def_readonly("from_", &Move::from)
        .def_readonly("to", &Move::to)
        .def_static("slide", &Move::slide)
        .def_static("jump", &Move::jump)
        .def_static("add", &Move::add)
        .def_static("remove", &Move::remove)
        .def("__eq__", [](const Move& a, const Move& b) { return a == b; })
        .def("__repr__", [](const Move& mv) {
            std::ostringstream os;
            write_certificate(os, {mv});
            std::string s = os.str();
            s.pop_back();
            return "Move(" + s + ")";
        });

    py::class_<ReconfigInstance>(m, "Instance")
        .def(py::init(&make_instance), py::arg("graph"), py::arg("c"), py::arg("rule") = "ts", py::arg("threshold") = 0,
             py::arg("source"), py::arg("target"))
        .def_readonly("graph", &ReconfigInstance::graph)
        .def_readonly("c", &ReconfigInstance::c)
        .def_readonly("source", &ReconfigInstance::source)
        .def_readonly("target", &ReconfigInstance::target)
        .def("to_text", [](const ReconfigInstance& i) { return to_text(i, write_instance); })
        .def_static("from_text", [](const std::string& text) {
            std::istringstream in(text);
            return parse_instance(in);
        });

    m.def("split_partition", [](const Graph& g) -> py::object {
        auto p = split_partition(g);
        if (!p) return py::none();
        return py::make_tuple(p->clique, p->independent);
    });
    m.def("is_chordal", [](const Graph& g) { return elimination_order(g).has_value(); });
    m.def("chromatic_leq", [](const Graph& g, VertexSet s, int c) {
        std::sort(s.begin(), s.end());
        return chromatic_leq(g, s, c);
    });

    m.def(
        "solve",
        [](const ReconfigInstance& inst, int jobs) {
            const SolveResult r = solve(inst, {jobs});
            return py::make_tuple(r.reachable, witness_or_none(r.witness));
        },
        py::arg("instance"), py::arg("jobs") = 1, "Returns (reachable, witness or None).");
    m.def(
        "oracle",
        [](const ReconfigInstance& inst, std::size_t max_states) {
            const OracleResult r = reconfig_oracle(inst, {}, {max_states});
            return py::make_tuple(r.reachable, witness_or_none(r.witness));
        },
        py::arg("instance"), py::arg("max_states") = OracleOptions{}.max_states);
    m.def("validate", [](const ReconfigInstance& inst, const MoveSequence& seq) {
        const ValidationResult r = validate_sequence(inst, seq);
        return py::make_tuple(r.valid, r.failure_index, r.reason);
    });

    m.def(
        "split_to_chordal", [](const ReconfigInstance& inst, int c) { return split_to_chordal(inst, c).instance; },
        py::arg("instance"), py::arg("c"));
    m.def(
        "generate_split",
        [](std::uint64_t seed, int n, int clique, int c, int tokens, double density) {
            return generate_split(seed, n, clique, c, tokens, density);
        },
        py::arg("seed"), py::arg("n"), py::arg("clique"), py::arg("c"), py::arg("tokens"), py::arg("density") = 0.5);
}
