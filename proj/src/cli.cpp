#include "heawood/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "heawood/analysis.hpp"
#include "heawood/error.hpp"
#include "heawood/fixtures.hpp"
#include "heawood/io.hpp"
#include "heawood/quotient.hpp"
#include "heawood/symmetry.hpp"

namespace heawood {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kRefused = 3;

Json number(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Json numbers(const std::vector<Integer>& xs) {
    auto a = Json::array();
    for (const auto& x : xs) a.push_back(number(x));
    return a;
}

std::optional<std::size_t> env_cap() {
    const char* s = std::getenv("HEAWOOD_CAP");
    if (!s || !*s) return std::nullopt;
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != std::string(s).size() || v <= 0) throw std::invalid_argument("cap");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw Error(ErrorKind::Validation, "HEAWOOD_CAP must be a positive integer");
    }
}

IntMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<std::int64_t>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<std::int64_t> r;
        std::stringstream es(row);
        std::string item;
        while (std::getline(es, item, ',')) {
            try {
                std::size_t used = 0;
                r.push_back(std::stoll(item, &used));
                while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw Error(ErrorKind::Validation, "bad matrix entry '" + item + "'");
            }
        }
        if (!rows.empty() && r.size() != rows.front().size()) throw Error(ErrorKind::ShapeError, "matrix rows differ in length");
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw Error(ErrorKind::Validation, "empty matrix");
    return IntMatrix::from_rows(rows);
}

Json signature_json(const KSignature& k) {
    return Json(std::vector<std::int64_t>(k.entries().begin(), k.entries().end()));
}

std::vector<std::string> labels_of(const QuotientGraph& h, const std::vector<int>& vs) {
    std::vector<std::string> out;
    for (int v : vs) out.push_back(h.label(v));
    return out;
}

Coords parse_coords(const std::string& text) {
    Coords x;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            x.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw Error(ErrorKind::Validation, "bad coordinate '" + item + "'");
        }
    }
    return x;
}

struct Emitter {
    std::ostream& out;
    std::string path;

    void text(const std::string& body) const {
        if (path.empty()) {
            out << body;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error(ErrorKind::Validation, "cannot write " + path);
        f << body;
    }
    void json(const Json& j) const { text(j.dump() + "\n"); }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalised Heawood graphs and triangulated tori", "heawood"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output;
    std::uint64_t seed = 0;
    app.add_option("-o,--output", output, "Write the result to a file instead of stdout");
    app.add_option("--seed", seed, "Seed for tie-breaking; every search here is deterministic");

    std::string ksig;
    bool allow_delta = false;
    auto add_k = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("-k,--signature", ksig, "Signature such as 1,1,1");
        if (required) opt->required();
        sub->add_flag("--delta", allow_delta, "Allow zero entries");
    };

    auto* build = app.add_subcommand("build", "Build H_k or T_k");
    add_k(build, false);
    std::string matrix;
    bool want_graph = false, want_torus = false;
    std::string format = "json";
    build->add_option("--matrix", matrix, "Rows of a general matrix, e.g. \"2,0,-1;0,2,-1;-1,-1,3\"");
    build->add_flag("--graph", want_graph, "Export the graph (default)");
    build->add_flag("--torus", want_torus, "Export the triangulated torus");
    build->add_option("--format", format, "json, dot or off")->check(CLI::IsMember({"json", "dot", "off"}));

    auto* fvec = app.add_subcommand("fvector", "f-vector of T_k");
    add_k(fvec);
    bool f_formula = false, f_enum = false, f_both = false;
    fvec->add_flag("--formula", f_formula);
    fvec->add_flag("--enumerate", f_enum);
    fvec->add_flag("--both", f_both);

    auto* aut = app.add_subcommand("aut", "Automorphism group orders");
    add_k(aut);
    bool a_gen = false, a_brute = false, a_cmp = false;
    aut->add_flag("--generated", a_gen);
    aut->add_flag("--brute", a_brute);
    aut->add_flag("--compare", a_cmp);

    auto* analyze = app.add_subcommand("analyze", "Graph analyses of H_k");
    add_k(analyze);
    bool an_bip = false, an_six = false, an_chrom = false, an_sweep = false, an_skeleton = false;
    std::optional<int> an_ham;
    std::optional<std::uint64_t> an_backtrack;
    std::string an_vertex;
    analyze->add_flag("--bipartite", an_bip);
    analyze->add_option("--hamiltonian", an_ham, "Alternating walk for index i");
    analyze->add_flag("--sweep", an_sweep, "Alternating walk for every i");
    analyze->add_option("--backtrack", an_backtrack, "Exhaustive Hamiltonian search with this node budget")
        ->expected(0, 1)
        ->default_str("50000000");
    analyze->add_flag("--six-cycles", an_six);
    analyze->add_option("--vertex", an_vertex, "Vertex for --six-cycles, default the seed");
    analyze->add_flag("--chromatic", an_chrom);
    analyze->add_flag("--skeleton", an_skeleton, "Colour the 1-skeleton of T_k instead of H_k");

    auto* census = app.add_subcommand("census", "Quotient by a general 3x3 matrix");
    std::string c_matrix;
    census->add_option("--matrix", c_matrix, "Rows separated by ';'")->required();

    auto* render = app.add_subcommand("render", "SVG of the fundamental tile (d = 2)");
    add_k(render);
    std::string domain = "fundamental-tile";
    render->add_option("--domain", domain, "parallelepiped or permutahedron");

    auto* fixture = app.add_subcommand("fixture", "Shipped complexes");
    std::string fixture_name;
    bool fx_aut = false;
    std::string fx_format = "json";
    fixture->add_option("name", fixture_name, "klein-quartic")->required()->check(CLI::IsMember({"klein-quartic"}));
    fixture->add_flag("--aut", fx_aut, "Also compute automorphism group orders");
    fixture->add_option("--format", fx_format, "json or off")->check(CLI::IsMember({"json", "off"}));

    auto* hnum = app.add_subcommand("heawood-number", "Heawood number N_p of the genus p surface");
    std::string genus;
    hnum->add_option("-p,--genus", genus)->required();

    std::vector<const char*> argv{"heawood"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kInvalid;
    }

    const Emitter emit{out, output};
    try {
        const auto cap = env_cap();
        auto signature = [&] { return KSignature::parse(ksig, allow_delta); };

        if (build->parsed()) {
            if (want_graph && want_torus) throw Error(ErrorKind::Validation, "choose one of --graph and --torus");
            if (matrix.empty() == ksig.empty()) throw Error(ErrorKind::Validation, "give exactly one of -k and --matrix");
            const auto h = matrix.empty() ? build_heawood_graph(signature()) : build_general_quotient(parse_matrix(matrix));
            if (!want_torus) {
                if (format == "off") throw Error(ErrorKind::Validation, "OFF applies to the torus");
                emit.text(export_graph(h, parse_graph_format(format)));
                return kOk;
            }
            const auto t = build_torus_complex(h);
            if (format == "dot") throw Error(ErrorKind::Validation, "DOT applies to the graph");
            if (format == "off") {
                const auto& sig = h.lattice().signature();
                std::vector<Point3> coords;
                if (sig && sig->dim() <= 3) coords = torus_vertex_positions(*sig);
                emit.text(export_complex_off(t, coords));
                return kOk;
            }
            Json doc;
            doc["schema"] = kSchema;
            if (h.lattice().signature()) doc["signature"] = signature_json(*h.lattice().signature());
            else doc["signature"] = nullptr;
            doc["vertices"] = t.labels();
            doc["facets"] = t.facets();
            doc["f_vector"] = t.f_vector();
            doc["euler_characteristic"] = t.euler_characteristic();
            emit.text(doc.dump(2) + "\n");
            return kOk;
        }

        if (fvec->parsed()) {
            const auto k = signature();
            const bool formula = f_formula || f_both || !f_enum;
            const bool enumerate = f_enum || f_both || !f_formula;
            Json doc;
            std::vector<Integer> a, b;
            if (formula) doc["formula"] = numbers(a = fvector_formula(k));
            if (enumerate) {
                for (auto x : build_torus_complex(k).f_vector()) b.emplace_back(static_cast<long>(x));
                doc["enumerated"] = numbers(b);
            }
            if (formula && enumerate) doc["match"] = a == b;
            emit.json(doc);
            return kOk;
        }

        if (aut->parsed()) {
            const auto k = signature();
            const bool gen = a_gen || a_cmp || !a_brute;
            const bool brute = a_brute || a_cmp || !a_gen;
            const auto h = build_heawood_graph(k);
            Json doc;
            std::uint64_t g = 0, b = 0;
            if (gen) {
                g = group_closure(standard_generators(h), h.vertex_count()).order();
                doc["generated"] = g;
            }
            if (brute) {
                AutSearchOptions opts;
                if (cap) opts.vertex_cap = *cap;
                const auto r = brute_force_automorphisms(h.graph(), opts);
                b = r.order;
                doc["brute"] = b;
                if (!gen) {
                    doc["vertex_transitive"] = r.vertex_transitive();
                    auto sizes = Json::array();
                    for (const auto& o : r.orbits) sizes.push_back(o.size());
                    doc["orbit_sizes"] = sizes;
                }
            }
            if (gen && brute) doc["exceptional"] = g != b;
            emit.json(doc);
            return kOk;
        }

        if (analyze->parsed()) {
            const auto k = signature();
            const auto h = build_heawood_graph(k);
            const int chosen = an_bip + an_ham.has_value() + an_sweep + an_backtrack.has_value() + an_six + an_chrom;
            if (chosen != 1) throw Error(ErrorKind::Validation, "choose exactly one analysis");
            Json doc;
            int status = kOk;
            if (an_bip) {
                const auto r = is_bipartite(h.graph());
                doc["bipartite"] = r.bipartite;
                if (!r.bipartite) doc["odd_cycle"] = labels_of(h, r.odd_cycle);
            } else if (an_ham) {
                const auto r = hamiltonian_alternating(h, *an_ham);
                doc["outcome"] = to_string(r.outcome);
                doc["length"] = r.length;
                doc["vertices"] = r.vertices;
                if (r.outcome == WalkOutcome::HamiltonianCycle) doc["cycle"] = labels_of(h, r.walk);
            } else if (an_sweep) {
                auto results = Json::array();
                for (int i = 1; i <= static_cast<int>(k.size()); ++i) {
                    Json row;
                    row["i"] = i;
                    try {
                        const auto r = hamiltonian_alternating(h, i);
                        row["outcome"] = to_string(r.outcome);
                        row["length"] = r.length;
                    } catch (const Error& e) {
                        if (e.kind() != ErrorKind::InvalidWalk) throw;
                        row["outcome"] = "invalid-walk";
                    }
                    results.push_back(row);
                }
                doc["vertices"] = h.vertex_count();
                doc["results"] = results;
            } else if (an_backtrack) {
                const std::size_t limit = cap.value_or(2000);
                if (h.vertex_count() > limit) throw Error(ErrorKind::CapExceeded, "graph exceeds the vertex cap");
                const auto r = hamiltonian_backtracking(h.graph(), *an_backtrack);
                doc["outcome"] = to_string(r.outcome);
                doc["length"] = r.length;
                doc["vertices"] = r.vertices;
                doc["nodes"] = r.nodes;
                if (r.outcome == WalkOutcome::HamiltonianCycle) doc["cycle"] = labels_of(h, r.walk);
                if (r.outcome == WalkOutcome::Indeterminate) status = kRefused;
            } else if (an_six) {
                Coords x;
                if (an_vertex.empty())
                    for (std::size_t t = 0; t < k.size(); ++t) x.push_back(static_cast<std::int64_t>(t + 1));
                else
                    x = parse_coords(an_vertex);
                const auto v = h.find(x);
                if (!v) throw Error(ErrorKind::Validation, "not a vertex of the tiling");
                const auto cycles = six_cycles_through(h, *v);
                doc["vertex"] = h.label(*v);
                doc["count"] = cycles.size();
                auto list = Json::array();
                for (const auto& c : cycles) list.push_back({{"vertices", labels_of(h, c.vertices)}, {"kind", to_string(c.kind)}});
                doc["cycles"] = list;
            } else {
                const Graph g = an_skeleton ? build_torus_complex(k).one_skeleton() : h.graph();
                const auto r = chromatic_number(g, cap.value_or(60));
                doc["chromatic"] = r.exact ? Json(r.upper) : Json(nullptr);
                doc["lower"] = r.lower;
                doc["upper"] = r.upper;
                doc["exact"] = r.exact;
                if (!r.exact) status = kRefused;
            }
            emit.json(doc);
            return status;
        }

        if (census->parsed()) {
            const auto m = parse_matrix(c_matrix);
            const auto h = build_general_quotient(m);
            std::vector<std::int64_t> ones(m.cols(), 1);
            Json doc;
            doc["det"] = number(det(m));
            doc["order"] = number(h.lattice().order());
            doc["vertices"] = h.vertex_count();
            doc["edges"] = h.edge_count();
            doc["ones_in_rowspan"] = integer_span_contains(m, std::span<const std::int64_t>(ones));
            const bool simplicial = torus_is_simplicial(h);
            doc["simplicial"] = simplicial;
            doc["delta"] = !simplicial;
            doc["bipartite"] = is_bipartite(h.graph()).bipartite;
            emit.json(doc);
            return kOk;
        }

        if (render->parsed()) {
            emit.text(render_svg(fundamental_tile_scene(signature(), parse_domain_kind(domain))));
            return kOk;
        }

        if (fixture->parsed()) {
            const auto c = klein_quartic();
            if (fx_format == "off") {
                emit.text(export_complex_off(c));
                return kOk;
            }
            Json doc;
            doc["name"] = klein_quartic_fixture().name;
            doc["vertices"] = c.vertex_count();
            doc["edges"] = c.faces(1).size();
            doc["facets"] = c.facets().size();
            doc["euler_characteristic"] = c.euler_characteristic();
            if (fx_aut) {
                const auto orders = klein_quartic_aut_orders();
                doc["simplicial_aut"] = orders.simplicial;
                doc["dual_graph_aut"] = orders.dual_graph;
            }
            emit.json(doc);
            return kOk;
        }

        if (hnum->parsed()) {
            Integer p;
            if (p.set_str(genus, 10) != 0) throw Error(ErrorKind::Validation, "genus must be an integer");
            Json doc;
            doc["genus"] = number(p);
            doc["heawood_number"] = number(heawood_number(p));
            emit.json(doc);
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::CapExceeded ? kRefused : kInvalid;
    }
    return kInvalid;
}

}  // namespace heawood
