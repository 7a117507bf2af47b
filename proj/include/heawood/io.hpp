#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heawood/complex.hpp"
#include "heawood/graph.hpp"
#include "heawood/lattice.hpp"
#include "heawood/quotient.hpp"

namespace heawood {

inline constexpr const char* kSchema = "heawood-kit/1";

enum class DomainKind { FundamentalTile, Parallelepiped, PermutahedronDomain };
std::string to_string(DomainKind k);
DomainKind parse_domain_kind(std::string_view s);

/// Row i of M_k read as a combination of the w's. The w-tilde coefficients
/// of p~_i are `rows[i]`; `ambient[i]` is p_i = (d+1) p~_i in ambient
/// coordinates.
struct DomainSpec {
    DomainKind kind = DomainKind::FundamentalTile;
    KSignature k = KSignature::strict({1, 1, 1});
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::vector<std::int64_t>> ambient;
};

DomainSpec domain_vectors(const KSignature& k, DomainKind kind = DomainKind::FundamentalTile);

using Point2 = std::array<double, 2>;

/// Planar image of an ambient point with axes at 240, 0 and 120 degrees.
Point2 project_plane(std::span<const std::int64_t> x);
Point2 project_plane(std::span<const double> x);

struct Hexagon {
    WCoeffs offset;
    std::vector<std::int64_t> centre;  // ambient translation of the base tile
    std::vector<Point2> outline;       // 123, 213, 312, 321, 231, 132
    std::string colour;
};

struct RenderScene2D {
    KSignature k = KSignature::strict({1, 1, 1});
    std::vector<Hexagon> hexagons;
    DomainKind domain = DomainKind::FundamentalTile;
    std::vector<Point2> domain_outline;  // empty for the bare tile
};

RenderScene2D fundamental_tile_scene(const KSignature& k, DomainKind domain = DomainKind::FundamentalTile);
std::string render_svg(const RenderScene2D& scene);

/// Signed shoelace area.
double polygon_area(const std::vector<Point2>& poly);

enum class GraphFormat { Dot, Json };
GraphFormat parse_graph_format(std::string_view s);

std::string export_graph(const QuotientGraph& h, GraphFormat format);
std::string export_graph(const Graph& g, GraphFormat format);

struct ParsedGraph {
    Graph graph;
    std::vector<std::vector<std::int64_t>> vertices;  // empty when unlabelled
    std::optional<std::vector<std::int64_t>> signature;
};
ParsedGraph graph_from_json(std::string_view text);

using Point3 = std::array<double, 3>;
/// Positions of the torus vertices (sorted representatives) for d <= 3.
std::vector<Point3> torus_vertex_positions(const KSignature& k);
/// Surfaces list their facets, solids their 2-faces. Without coordinates the
/// vertices sit on the unit circle in index order.
std::string export_complex_off(const SimplicialComplex& c, const std::vector<Point3>& coords = {});

}  // namespace heawood
