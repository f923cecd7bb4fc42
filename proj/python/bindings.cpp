#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tokens/enumerate.hpp"
#include "tokens/families.hpp"
#include "tokens/graph.hpp"
#include "tokens/graph6.hpp"
#include "tokens/multiset.hpp"
#include "tokens/serialize.hpp"
#include "tokens/spectral.hpp"
#include "tokens/subsets.hpp"
#include "tokens/theory.hpp"
#include "tokens/token_graph.hpp"

namespace py = pybind11;
using namespace tokens;

namespace {

// Reports come out of the C++ layer as JSON documents; hand them to python
// as plain dicts/lists so callers get the same schema as the CLI.
py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default:
            return py::none();
    }
}

template <class T>
py::object report_dict(const T& report) {
    const json j = report;  // uses the library's to_json overloads
    return json_to_py(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "token graph construction and Laplacian spectra";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("max_degree", &Graph::max_degree)
        .def("edges", &Graph::edges)
        .def("is_connected", &Graph::is_connected)
        .def("is_tree", &Graph::is_tree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream ss;
            ss << "Graph(graph6='" << emit_graph6(g) << "', n=" << g.vertex_count()
               << ", m=" << g.edge_count() << ")";
            return ss.str();
        });

    m.def("complement", &complement, py::arg("g"));
    m.def("delete_vertex", &delete_vertex, py::arg("g"), py::arg("v"));
    m.def("collapse_edge", &collapse_edge, py::arg("g"), py::arg("u"), py::arg("v"));

    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); }, py::arg("text"));
    m.def("emit_graph6", &emit_graph6, py::arg("g"));
    m.def("read_graph6_file", &read_graph6_file, py::arg("path"));

    m.def(
        "family",
        [](const std::string& name, int n) {
            return build_family(family_kind_from_string(name), n);
        },
        py::arg("name"), py::arg("n"));
    m.def(
        "complete_multipartite",
        [](const std::vector<int>& parts) {
            FamilySpec spec;
            spec.kind = FamilyKind::complete_multipartite;
            spec.parts = parts;
            return build_family(spec);
        },
        py::arg("parts"));
    m.def("family_names", &family_names);

    m.def("labeled_graph_count", &labeled_graph_count, py::arg("n"));
    m.def("labeled_graph", &labeled_graph, py::arg("n"), py::arg("index"));
    m.def("labeled_tree_count", &labeled_tree_count, py::arg("n"));
    m.def("labeled_tree", &labeled_tree, py::arg("n"), py::arg("index"));
    m.def("sample_graph", &sample_graph, py::arg("n"), py::arg("seed"));

    m.def("binom", &binom, py::arg("n"), py::arg("k"));
    py::class_<SubsetIndex>(m, "SubsetIndex")
        .def(py::init<int, int>(), py::arg("n"), py::arg("k"))
        .def_property_readonly("n", &SubsetIndex::n)
        .def_property_readonly("k", &SubsetIndex::k)
        .def_property_readonly("size", &SubsetIndex::size)
        .def("rank", &SubsetIndex::rank, py::arg("subset"))
        .def("unrank", &SubsetIndex::unrank, py::arg("r"));

    py::class_<TokenGraph>(m, "TokenGraph")
        .def_readonly("graph", &TokenGraph::graph)
        .def_readonly("source_n", &TokenGraph::source_n)
        .def_readonly("k", &TokenGraph::k)
        .def("labels", &TokenGraph::labels)
        .def("label", &TokenGraph::label, py::arg("vertex"));
    m.def("token_graph", &token_graph, py::arg("g"), py::arg("k"),
          py::arg("guard") = kDefaultVertexGuard);

    py::class_<BinomialMatrix>(m, "BinomialMatrix")
        .def(py::init<int, int>(), py::arg("n"), py::arg("k"))
        .def_property_readonly("rows", &BinomialMatrix::rows)
        .def_property_readonly("cols", &BinomialMatrix::cols)
        .def("apply", &BinomialMatrix::apply, py::arg("v"))
        .def("apply_transpose", &BinomialMatrix::apply_transpose, py::arg("u"));
    m.def("lift_eigenvector", &lift_eigenvector, py::arg("b"), py::arg("v"));
    m.def("project_eigenvector", &project_eigenvector, py::arg("b"), py::arg("u"));

    m.def("laplacian_spectrum", &laplacian_spectrum, py::arg("g"));
    m.def("algebraic_connectivity", &algebraic_connectivity, py::arg("g"));
    m.def("spectral_radius", &spectral_radius, py::arg("g"));
    m.def("fiedler_vector", &fiedler_vector, py::arg("g"));
    m.def("rayleigh_quotient", &rayleigh_quotient, py::arg("g"), py::arg("x"));
    m.def("extend_embedding", &extend_embedding, py::arg("v"), py::arg("attach_at"));

    m.def(
        "johnson_spectrum",
        [](int n, int k) { return report_dict(johnson_spectrum(n, k)); },
        py::arg("n"), py::arg("k"));
    m.def(
        "check_containment",
        [](const Graph& g, int k, double tol_base, std::uint64_t guard) {
            return report_dict(check_containment(g, k, tol_base, guard));
        },
        py::arg("g"), py::arg("k"), py::arg("tol_base") = kSpectraTolBase,
        py::arg("guard") = kDefaultVertexGuard);
    m.def(
        "check_pairing",
        [](const Graph& g, int k, double tol_base, std::uint64_t guard) {
            return report_dict(check_pairing(g, k, tol_base, guard));
        },
        py::arg("g"), py::arg("k"), py::arg("tol_base") = kSpectraTolBase,
        py::arg("guard") = kDefaultVertexGuard);
    m.def(
        "level_partition",
        [](const Graph& g, int k, double tol_base, std::uint64_t guard) {
            return report_dict(level_partition(g, k, tol_base, guard));
        },
        py::arg("g"), py::arg("k"), py::arg("tol_base") = kSpectraTolBase,
        py::arg("guard") = kDefaultVertexGuard);
    m.def(
        "check_conjecture",
        [](const Graph& g, int k, double tol, std::uint64_t guard) {
            return report_dict(check_conjecture(g, k, tol, guard));
        },
        py::arg("g"), py::arg("k"), py::arg("tol") = 1e-8,
        py::arg("guard") = kDefaultVertexGuard);
    m.def(
        "check_degree_bounds",
        [](const Graph& g, int k, double tol_base, std::uint64_t guard) {
            return report_dict(check_degree_bounds(g, k, tol_base, guard));
        },
        py::arg("g"), py::arg("k"), py::arg("tol_base") = kSpectraTolBase,
        py::arg("guard") = kDefaultVertexGuard);
    m.def(
        "find_graph_by_spectra",
        [](int n, const std::vector<double>& spectrum,
           const std::vector<double>& complement_spectrum, double tol) {
            const FindResult res = find_graph_by_spectra(n, spectrum, complement_spectrum, tol);
            py::object out = report_dict(res);
            out[py::str("graph")] = py::cast(res.graph);
            return out;
        },
        py::arg("n"), py::arg("spectrum"), py::arg("complement_spectrum"),
        py::arg("tol") = 1e-6);
    m.def("transfer_threshold", &transfer_threshold, py::arg("k"), py::arg("n"));
    m.def("transfer_applies", &transfer_applies, py::arg("g"), py::arg("k"));
    m.def("token_kernel_eigenpairs", &token_kernel_eigenpairs, py::arg("g"), py::arg("k"),
          py::arg("tol_base") = kSpectraTolBase, py::arg("guard") = kDefaultVertexGuard);
}
