#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heawood/analysis.hpp"
#include "heawood/error.hpp"
#include "heawood/fixtures.hpp"
#include "heawood/io.hpp"
#include "heawood/quotient.hpp"
#include "heawood/symmetry.hpp"

namespace py = pybind11;
using namespace heawood;

namespace {

py::int_ to_py(const Integer& x) { return py::int_(py::str(x.get_str())); }

py::list to_py(const std::vector<Integer>& xs) {
    py::list out;
    for (const auto& x : xs) out.append(to_py(x));
    return out;
}

KSignature sig(const std::vector<std::int64_t>& k, bool delta) {
    return delta ? KSignature::delta(k) : KSignature::strict(k);
}

py::dict walk_dict(const HamiltonianWalkResult& r, const QuotientGraph* h) {
    py::dict d;
    d["mode"] = r.mode;
    d["i"] = r.i;
    d["outcome"] = to_string(r.outcome);
    d["length"] = r.length;
    d["vertices"] = r.vertices;
    if (h) {
        std::vector<Coords> walk;
        for (int v : r.walk) walk.push_back(h->key(v));
        d["walk"] = walk;
    } else {
        d["walk"] = r.walk;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Generalised Heawood graphs and triangulated tori";

    static py::exception<Error> heawood_error(m, "HeawoodError", PyExc_ValueError);
    static py::exception<Error> cap_error(m, "CapExceeded", heawood_error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::CapExceeded) py::set_error(cap_error, e.what());
            else py::set_error(heawood_error, e.what());
        }
    });

    m.def("dk", [](const std::vector<std::int64_t>& k) { return to_py(closed_form_dk(k)); }, py::arg("k"));
    m.def("fvector_formula", [](const std::vector<std::int64_t>& k) { return to_py(fvector_formula(KSignature::strict(k))); },
          py::arg("k"));
    m.def("fvector_factors", [](int d) { return to_py(fvector_factors(d)); }, py::arg("d"));
    m.def(
        "reduce_to_fundamental",
        [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& k) {
            const auto c = reduce_to_fundamental(std::span<const std::int64_t>(a), KSignature::strict(k));
            return std::vector<std::int64_t>(c.rep.coeffs().begin(), c.rep.coeffs().end());
        },
        py::arg("a"), py::arg("k"));
    m.def(
        "fundamental_vectors",
        [](const std::vector<std::int64_t>& k) {
            std::vector<std::vector<std::int64_t>> out;
            for (const auto& c : enumerate_fundamental(KSignature::strict(k)))
                out.emplace_back(c.rep.coeffs().begin(), c.rep.coeffs().end());
            return out;
        },
        py::arg("k"));
    m.def("quotient_order", [](const std::vector<std::vector<std::int64_t>>& rows) {
        return to_py(quotient_order_general(IntMatrix::from_rows(rows)));
    });

    py::class_<QuotientGraph>(m, "HeawoodGraph")
        .def_property_readonly("vertex_count", &QuotientGraph::vertex_count)
        .def_property_readonly("edge_count", &QuotientGraph::edge_count)
        .def_property_readonly("dim", &QuotientGraph::dim)
        .def_property_readonly("keys", &QuotientGraph::keys)
        .def("edges", [](const QuotientGraph& h) { return h.graph().edges(); })
        .def("neighbors", [](const QuotientGraph& h, int v) { return h.graph().neighbors(v); })
        .def("label", &QuotientGraph::label)
        .def("index_of", [](const QuotientGraph& h, const Coords& x) { return h.index_of(x); })
        .def("to_json", [](const QuotientGraph& h) { return export_graph(h, GraphFormat::Json); })
        .def("to_dot", [](const QuotientGraph& h) { return export_graph(h, GraphFormat::Dot); })
        .def("__repr__", [](const QuotientGraph& h) {
            return "<HeawoodGraph " + h.tag() + " with " + std::to_string(h.vertex_count()) + " vertices>";
        });

    m.def("heawood_graph", [](const std::vector<std::int64_t>& k, bool delta) { return build_heawood_graph(sig(k, delta)); },
          py::arg("k"), py::arg("delta") = false);
    m.def("general_quotient", [](const std::vector<std::vector<std::int64_t>>& rows) {
        return build_general_quotient(IntMatrix::from_rows(rows));
    });

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_property_readonly("vertex_count", &SimplicialComplex::vertex_count)
        .def_property_readonly("dim", &SimplicialComplex::dim)
        .def_property_readonly("facets", &SimplicialComplex::facets)
        .def_property_readonly("labels", &SimplicialComplex::labels)
        .def("f_vector", &SimplicialComplex::f_vector)
        .def("euler_characteristic", &SimplicialComplex::euler_characteristic)
        .def("to_off", [](const SimplicialComplex& c) { return export_complex_off(c); });

    m.def("torus", [](const std::vector<std::int64_t>& k) { return build_torus_complex(KSignature::strict(k)); }, py::arg("k"));
    m.def("complex_from_facets", py::overload_cast<const std::vector<std::vector<std::string>>&>(&complex_from_facets));
    m.def("klein_quartic", &klein_quartic);
    m.def("klein_quartic_aut_orders", [] {
        const auto r = klein_quartic_aut_orders();
        return py::dict(py::arg("simplicial") = r.simplicial, py::arg("dual_graph") = r.dual_graph);
    });

    m.def(
        "generated_group_order",
        [](const QuotientGraph& h) { return group_closure(standard_generators(h), h.vertex_count()).order(); },
        py::arg("h"));
    m.def(
        "automorphism_group",
        [](const QuotientGraph& h, std::size_t cap) {
            AutSearchOptions opts;
            opts.vertex_cap = cap;
            const auto r = brute_force_automorphisms(h.graph(), opts);
            return py::dict(py::arg("order") = r.order, py::arg("orbits") = r.orbits,
                            py::arg("vertex_transitive") = r.vertex_transitive());
        },
        py::arg("h"), py::arg("cap") = 200);
    m.def("verify_exceptional_W", &verify_exceptional_W);

    m.def("is_bipartite", [](const QuotientGraph& h) { return is_bipartite(h.graph()).bipartite; });
    m.def("six_cycles_through", [](const QuotientGraph& h, const Coords& x) {
        py::list out;
        for (const auto& c : six_cycles_through(h, h.index_of(x))) {
            std::vector<Coords> vs;
            for (int v : c.vertices) vs.push_back(h.key(v));
            out.append(py::dict(py::arg("vertices") = vs, py::arg("kind") = to_string(c.kind)));
        }
        return out;
    });
    m.def("hamiltonian_alternating", [](const QuotientGraph& h, int i) { return walk_dict(hamiltonian_alternating(h, i), &h); });
    m.def(
        "hamiltonian_backtracking",
        [](const QuotientGraph& h, std::uint64_t budget) { return walk_dict(hamiltonian_backtracking(h.graph(), budget), &h); },
        py::arg("h"), py::arg("budget") = 50'000'000);
    m.def(
        "chromatic_number",
        [](const std::vector<std::pair<int, int>>& edges, std::size_t n, std::size_t cap) {
            Graph g(n);
            for (const auto& [u, v] : edges) g.add_edge(u, v);
            const auto r = chromatic_number(g, cap);
            return py::dict(py::arg("lower") = r.lower, py::arg("upper") = r.upper, py::arg("exact") = r.exact);
        },
        py::arg("edges"), py::arg("vertex_count"), py::arg("cap") = 60);
    m.def("heawood_number", [](const py::int_& p) {
        return to_py(heawood_number(Integer(py::str(p).cast<std::string>())));
    });

    m.def(
        "render_svg",
        [](const std::vector<std::int64_t>& k, const std::string& domain) {
            return render_svg(fundamental_tile_scene(KSignature::strict(k), parse_domain_kind(domain)));
        },
        py::arg("k"), py::arg("domain") = "fundamental-tile");
}
