#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heawood/complex.hpp"
#include "heawood/graph.hpp"
#include "heawood/lattice.hpp"
#include "heawood/tiling.hpp"

namespace heawood {

/// Canonical representative of x modulo the sublattice: base permutation plus
/// the reduced translation.
Coords vertex_key(std::span<const std::int64_t> x, const Sublattice& lattice);
Coords vertex_key(std::span<const std::int64_t> x, const KSignature& k);

/// The finite graph H = (tiling graph) / (sublattice). Vertices are indexed in
/// lexicographic order of their keys.
class QuotientGraph {
public:
    QuotientGraph(Sublattice lattice, std::vector<Coords> keys, Graph graph);

    const Graph& graph() const noexcept { return graph_; }
    const Sublattice& lattice() const noexcept { return lattice_; }
    int dim() const noexcept { return lattice_.dim(); }
    std::size_t vertex_count() const noexcept { return keys_.size(); }
    std::size_t edge_count() const noexcept { return graph_.edge_count(); }
    const std::vector<Coords>& keys() const noexcept { return keys_; }
    const Coords& key(int v) const { return keys_.at(static_cast<std::size_t>(v)); }
    /// Whether the signature allows zeros or the lattice came from raw rows
    /// that need not give a simplicial torus.
    bool delta_mode() const noexcept;
    std::string tag() const;

    /// Index of the class of any tiling vertex.
    int index_of(std::span<const std::int64_t> x) const;
    std::optional<int> find(std::span<const std::int64_t> x) const;
    /// Coordinates joined by commas, negatives with a leading minus.
    std::string label(int v) const;

private:
    Sublattice lattice_;
    std::vector<Coords> keys_;
    std::map<Coords, int> index_;
    Graph graph_;
};

QuotientGraph build_quotient(const Sublattice& lattice);
QuotientGraph build_heawood_graph(const KSignature& k);
/// Rows are coefficient vectors over w_1..w_{d+1}. Only d = 2 unless
/// any_dimension is set.
QuotientGraph build_general_quotient(const IntMatrix& rows, bool any_dimension = false);

/// Torus vertices are the lattice classes (sorted representatives); facet i
/// is the set of classes of the tiles through H-vertex i.
SimplicialComplex build_torus_complex(const QuotientGraph& h);
SimplicialComplex build_torus_complex(const KSignature& k);
/// The facets as multisets, without the simplicial checks.
std::vector<std::vector<int>> torus_facet_multisets(const QuotientGraph& h);
bool torus_is_simplicial(const QuotientGraph& h);

Integer stirling2(int n, int m);
/// Alternating-sum form (1/m!) sum_j (-1)^j C(m,j) (m-j)^n.
Integer stirling2_explicit(int n, int m);
/// i! S(d+1, i+1) for i = 0..d.
std::vector<Integer> fvector_factors(int d);
std::vector<Integer> fvector_formula(const KSignature& k);

/// Faces of the quotient tiling named canonically: ([B_1..B_m] with 1 in
/// B_1, reduced offset).
std::vector<TilingFace> canonical_faces(const QuotientGraph& h, int blocks);
/// Count of canonical faces with m = 1..d+1 blocks. An m-block face is dual
/// to a torus face of dimension m-1.
std::vector<std::int64_t> canonical_face_census(const QuotientGraph& h);
/// Vertex index sets of the 2-dimensional faces, sorted and deduplicated.
std::vector<std::vector<int>> two_face_vertex_sets(const QuotientGraph& h);

}  // namespace heawood
