#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "heawood/complex.hpp"
#include "heawood/symmetry.hpp"

namespace heawood {

struct NamedComplexFixture {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> facets;
};

/// One facet per line, labels separated by commas. Blank lines and lines
/// starting with '#' are skipped.
std::vector<std::vector<std::string>> parse_facet_list(std::string_view text);

/// Labels default to the sorted set of labels used by the facets.
/// Errors name the offending facet by its 0-based index.
SimplicialComplex complex_from_facets(const std::vector<std::string>& labels,
                                      const std::vector<std::vector<std::string>>& facets);
SimplicialComplex complex_from_facets(const std::vector<std::vector<std::string>>& facets);

const NamedComplexFixture& klein_quartic_fixture();
SimplicialComplex klein_quartic();

/// The order-7 rotation about vertex a (fixing a, w, x), as a vertex permutation.
Perm klein_quartic_rotation();

struct KleinQuarticOrders {
    std::uint64_t simplicial = 0;
    std::uint64_t dual_graph = 0;
};
KleinQuarticOrders klein_quartic_aut_orders();
/// Automorphism order of the dual graph.
std::uint64_t klein_quartic_aut_order();

}  // namespace heawood
