#include "heawood/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "heawood/error.hpp"

namespace heawood {

namespace {

constexpr double kSqrt3Half = 0.86602540378443864676;

const std::array<const char*, 12> kPalette = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                               "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

std::string fmt(double v) {
    if (std::abs(v) < 5e-7) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::vector<std::int64_t> to_i64(std::span<const Integer> row) {
    std::vector<std::int64_t> out;
    for (const auto& x : row) {
        if (!x.fits_slong_p()) throw Error(ErrorKind::Validation, "matrix entry does not fit in 64 bits");
        out.push_back(x.get_si());
    }
    return out;
}

void require_strict(const KSignature& k) {
    if (k.is_delta()) throw Error(ErrorKind::Validation, "domains need a strict signature");
}

}  // namespace

std::string to_string(DomainKind k) {
    switch (k) {
        case DomainKind::FundamentalTile: return "fundamental-tile";
        case DomainKind::Parallelepiped: return "parallelepiped";
        case DomainKind::PermutahedronDomain: return "permutahedron";
    }
    return "fundamental-tile";
}

DomainKind parse_domain_kind(std::string_view s) {
    if (s == "fundamental-tile" || s == "tile" || s == "none") return DomainKind::FundamentalTile;
    if (s == "parallelepiped") return DomainKind::Parallelepiped;
    if (s == "permutahedron" || s == "permutahedron-domain") return DomainKind::PermutahedronDomain;
    throw Error(ErrorKind::Validation, "unknown domain " + std::string(s));
}

DomainSpec domain_vectors(const KSignature& k, DomainKind kind) {
    require_strict(k);
    DomainSpec spec;
    spec.kind = kind;
    spec.k = k;
    const auto m = k.matrix();
    const int d = k.dim();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        spec.rows.push_back(to_i64(m.row(i)));
        std::vector<std::int64_t> v(m.cols(), 0);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto w = w_vector(j + 1, d);
            for (std::size_t t = 0; t < v.size(); ++t) v[t] += spec.rows[i][j] * w[t];
        }
        spec.ambient.push_back(std::move(v));
    }
    return spec;
}

Point2 project_plane(std::span<const double> x) {
    if (x.size() != 3) throw Error(ErrorKind::UnsupportedDimension, "planar projection needs three coordinates");
    // x along 240 degrees, y along 0, z along 120.
    return {-0.5 * x[0] + x[1] - 0.5 * x[2], -kSqrt3Half * x[0] + kSqrt3Half * x[2]};
}

Point2 project_plane(std::span<const std::int64_t> x) {
    std::vector<double> v(x.begin(), x.end());
    return project_plane(std::span<const double>(v));
}

double polygon_area(const std::vector<Point2>& poly) {
    double a = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        a += p[0] * q[1] - q[0] * p[1];
    }
    return a / 2;
}

RenderScene2D fundamental_tile_scene(const KSignature& k, DomainKind domain) {
    require_strict(k);
    if (k.dim() != 2) throw Error(ErrorKind::UnsupportedDimension, "tile rendering is only available for d = 2");
    static const std::array<std::array<std::int64_t, 3>, 6> order = {
        {{1, 2, 3}, {2, 1, 3}, {3, 1, 2}, {3, 2, 1}, {2, 3, 1}, {1, 3, 2}}};
    RenderScene2D scene;
    scene.k = k;
    scene.domain = domain;
    std::size_t idx = 0;
    for (const auto& cls : enumerate_fundamental(k)) {
        Hexagon hex;
        hex.offset = cls.rep;
        hex.centre = to_ambient(cls.rep);
        for (const auto& p : order) {
            std::array<std::int64_t, 3> x{};
            for (std::size_t t = 0; t < 3; ++t) x[t] = hex.centre[t] + p[t];
            hex.outline.push_back(project_plane(std::span<const std::int64_t>(x)));
        }
        hex.colour = kPalette[idx++ % kPalette.size()];
        scene.hexagons.push_back(std::move(hex));
    }
    // The barycentre (2,2,2) of the base tile projects to the origin.
    const auto spec = domain_vectors(k, domain);
    auto ambient_point = [&](const std::vector<double>& coeff) {
        std::vector<double> v(3, 0.0);
        for (std::size_t i = 0; i < coeff.size(); ++i)
            for (std::size_t t = 0; t < 3; ++t) v[t] += coeff[i] * static_cast<double>(spec.ambient[i][t]);
        return project_plane(std::span<const double>(v));
    };
    if (domain == DomainKind::Parallelepiped) {
        // The box [0,1]^d in the p basis.
        for (const auto& c : std::vector<std::vector<double>>{{0, 0}, {1, 0}, {1, 1}, {0, 1}})
            scene.domain_outline.push_back(ambient_point(c));
    } else if (domain == DomainKind::PermutahedronDomain) {
        for (const auto& p : order) {
            std::vector<double> c;
            for (auto a : p) c.push_back(static_cast<double>(a) / 3.0);
            scene.domain_outline.push_back(ambient_point(c));
        }
    }
    return scene;
}

std::string render_svg(const RenderScene2D& scene) {
    const double scale = 24.0;
    const double margin = 12.0;
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    auto grow = [&](const Point2& p) {
        const double x = p[0] * scale, y = -p[1] * scale;
        if (first) {
            minx = maxx = x;
            miny = maxy = y;
            first = false;
        }
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    };
    for (const auto& h : scene.hexagons)
        for (const auto& p : h.outline) grow(p);
    for (const auto& p : scene.domain_outline) grow(p);
    auto points = [&](const std::vector<Point2>& poly) {
        std::string s;
        for (const auto& p : poly) {
            if (!s.empty()) s += ' ';
            s += fmt(p[0] * scale - minx + margin) + "," + fmt(-p[1] * scale - miny + margin);
        }
        return s;
    };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(maxx - minx + 2 * margin) << "\" height=\""
        << fmt(maxy - miny + 2 * margin) << "\">\n";
    out << "  <title>fundamental tile " << scene.k.to_string() << "</title>\n";
    for (const auto& h : scene.hexagons)
        out << "  <polygon class=\"tile\" data-offset=\"" << h.offset.to_string() << "\" points=\"" << points(h.outline)
            << "\" fill=\"" << h.colour << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    if (!scene.domain_outline.empty())
        out << "  <polygon class=\"domain\" data-kind=\"" << to_string(scene.domain) << "\" points=\""
            << points(scene.domain_outline) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" stroke-dasharray=\"6,3\"/>\n";
    out << "</svg>\n";
    return out.str();
}

GraphFormat parse_graph_format(std::string_view s) {
    if (s == "dot") return GraphFormat::Dot;
    if (s == "json") return GraphFormat::Json;
    throw Error(ErrorKind::Validation, "unknown graph format " + std::string(s));
}

namespace {

std::string dot_document(const Graph& g, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "graph heawood {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "  " << v << " [label=\"" << labels[v] << "\"];\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json edge_list(const Graph& g) {
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return edges;
}

}  // namespace

std::string export_graph(const QuotientGraph& h, GraphFormat format) {
    if (format == GraphFormat::Dot) {
        std::vector<std::string> labels;
        for (std::size_t v = 0; v < h.vertex_count(); ++v) labels.push_back(h.label(static_cast<int>(v)));
        return dot_document(h.graph(), labels);
    }
    nlohmann::ordered_json doc;
    doc["schema"] = kSchema;
    const auto& sig = h.lattice().signature();
    if (sig) doc["signature"] = std::vector<std::int64_t>(sig->entries().begin(), sig->entries().end());
    else doc["signature"] = nullptr;
    doc["vertices"] = h.keys();
    doc["edges"] = edge_list(h.graph());
    nlohmann::ordered_json meta;
    meta["vertex_count"] = h.vertex_count();
    meta["edge_count"] = h.edge_count();
    meta["dk"] = h.lattice().order().get_str();
    if (sig && !sig->is_delta()) {
        const auto f = fvector_formula(*sig);
        meta["formulas"] = {{"vertices", f.back().get_str()}, {"edges", f[f.size() - 2].get_str()}};
    }
    doc["meta"] = meta;
    return doc.dump(2) + "\n";
}

std::string export_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::Dot) {
        std::vector<std::string> labels;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) labels.push_back(std::to_string(v));
        return dot_document(g, labels);
    }
    nlohmann::ordered_json doc;
    doc["schema"] = kSchema;
    doc["signature"] = nullptr;
    doc["vertex_count"] = g.vertex_count();
    doc["edges"] = edge_list(g);
    doc["meta"] = {{"vertex_count", g.vertex_count()}, {"edge_count", g.edge_count()}};
    return doc.dump(2) + "\n";
}

ParsedGraph graph_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Validation, std::string("invalid JSON: ") + e.what());
    }
    try {
        if (doc.value("schema", std::string()) != kSchema) throw Error(ErrorKind::Validation, "unsupported schema");
        ParsedGraph out;
        std::size_t n = 0;
        if (doc.contains("vertices")) {
            out.vertices = doc.at("vertices").get<std::vector<std::vector<std::int64_t>>>();
            n = out.vertices.size();
        } else {
            n = doc.at("vertex_count").get<std::size_t>();
        }
        if (doc.contains("signature") && !doc.at("signature").is_null())
            out.signature = doc.at("signature").get<std::vector<std::int64_t>>();
        out.graph = Graph(n);
        for (const auto& e : doc.at("edges")) {
            const auto u = e.at(0).get<std::int64_t>(), v = e.at(1).get<std::int64_t>();
            if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
                throw Error(ErrorKind::Validation, "edge endpoint out of range");
            out.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Validation, std::string("malformed graph document: ") + e.what());
    }
}

std::vector<Point3> torus_vertex_positions(const KSignature& k) {
    const int d = k.dim();
    if (d > 3) throw Error(ErrorKind::UnsupportedDimension, "positions are only available for d <= 3");
    std::vector<Point3> out;
    for (const auto& rep : Sublattice::from_signature(k).representatives()) {
        const auto x = to_ambient(rep);
        if (d == 2) {
            const auto p = project_plane(std::span<const std::int64_t>(x));
            out.push_back({p[0], p[1], 0.0});
        } else if (d == 3) {
            const double a = static_cast<double>(x[0]), b = static_cast<double>(x[1]), c = static_cast<double>(x[2]),
                         e = static_cast<double>(x[3]);
            out.push_back({(a - b) / std::sqrt(2.0), (a + b - 2 * c) / std::sqrt(6.0), (a + b + c - 3 * e) / std::sqrt(12.0)});
        } else {
            out.push_back({static_cast<double>(x[0]), 0.0, 0.0});
        }
    }
    return out;
}

std::string export_complex_off(const SimplicialComplex& c, const std::vector<Point3>& coords) {
    if (c.dim() > 3) throw Error(ErrorKind::UnsupportedDimension, "OFF export handles complexes up to dimension 3");
    if (!coords.empty() && coords.size() != c.vertex_count())
        throw Error(ErrorKind::Validation, "coordinate count does not match the vertex count");
    const auto faces = c.dim() <= 2 ? c.facets() : c.faces(2);
    const std::size_t edges = c.dim() >= 1 ? c.faces(1).size() : 0;
    std::ostringstream out;
    out << "OFF\n" << c.vertex_count() << ' ' << faces.size() << ' ' << edges << '\n';
    const double pi = std::acos(-1.0);
    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
        Point3 p;
        if (!coords.empty()) p = coords[v];
        else {
            const double t = 2 * pi * static_cast<double>(v) / static_cast<double>(c.vertex_count());
            p = {std::cos(t), std::sin(t), 0.0};
        }
        out << fmt(p[0]) << ' ' << fmt(p[1]) << ' ' << fmt(p[2]) << '\n';
    }
    for (const auto& f : faces) {
        out << f.size();
        for (int v : f) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

}  // namespace heawood
