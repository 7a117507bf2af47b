#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heawood/graph.hpp"

namespace heawood {

/// Pure simplicial complex given by its facets over vertices 0..n-1.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Facets are sorted on entry. Throws not-simplicial when a facet repeats
    /// a vertex or two facets coincide, and validation on mixed facet sizes.
    SimplicialComplex(std::size_t vertex_count, std::vector<std::vector<int>> facets,
                      std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return n_; }
    int dim() const noexcept { return facets_.empty() ? -1 : static_cast<int>(facets_.front().size()) - 1; }
    const std::vector<std::vector<int>>& facets() const noexcept { return facets_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(int v) const;

    /// All faces of the given dimension, sorted.
    std::vector<std::vector<int>> faces(int dimension) const;
    std::vector<std::int64_t> f_vector() const;
    std::int64_t euler_characteristic() const;

    Graph one_skeleton() const;
    /// Facets adjacent when they share a codimension-one face.
    Graph dual_graph() const;

private:
    std::size_t n_ = 0;
    std::vector<std::vector<int>> facets_;
    std::vector<std::string> labels_;
};

}  // namespace heawood
