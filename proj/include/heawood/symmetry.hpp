#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "heawood/complex.hpp"
#include "heawood/graph.hpp"
#include "heawood/quotient.hpp"

namespace heawood {

/// images[v] is the image of vertex v.
using Perm = std::vector<int>;

Perm identity_perm(std::size_t n);
/// (a * b)(v) = a(b(v)): apply b first.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_bijection(const Perm& p);
/// Bijection that carries every edge, with multiplicity, onto an edge.
bool is_automorphism(const Graph& g, const Perm& p);

/// Translations by w_1, ..., w_d.
std::vector<Perm> translation_generators(const QuotientGraph& h);
/// x -> (d+2)(1,...,1) - x.
Perm rotation_R(const QuotientGraph& h);
/// Whether shifting coordinates by s carries the sublattice to itself.
bool shift_admitted(const QuotientGraph& h, int s);
std::vector<int> admitted_shifts(const QuotientGraph& h);
/// Shifts s with k_{i+s} = k_i for all i.
std::vector<int> admitted_shifts(const KSignature& k);
/// y_{a+s} = x_a. Throws not-an-automorphism when the shift is refused.
Perm cyclic_C(const QuotientGraph& h, int s);
/// T, R and every admitted nontrivial shift.
std::vector<Perm> standard_generators(const QuotientGraph& h);

class PermutationGroup {
public:
    PermutationGroup(std::vector<Perm> generators, std::vector<Perm> elements);

    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<Perm>& generators() const noexcept { return gens_; }
    const std::vector<Perm>& elements() const noexcept { return elements_; }
    bool contains(const Perm& p) const;
    std::vector<std::vector<int>> orbits() const;

private:
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;  // sorted
};

/// Closure under composition. Throws cap-exceeded past `cap` elements.
PermutationGroup group_closure(const std::vector<Perm>& generators, std::size_t degree,
                               std::size_t cap = 1'000'000);

struct AutSearchOptions {
    std::size_t vertex_cap = 200;
    bool collect = false;
    std::uint64_t node_budget = 200'000'000;
    /// Extra condition a full map must meet to count.
    std::function<bool(const Perm&)> accept;
};

struct AutSearchResult {
    std::uint64_t order = 0;
    std::vector<Perm> elements;  // filled when collecting
    std::vector<std::vector<int>> orbits;
    std::uint64_t nodes = 0;
    bool vertex_transitive() const { return orbits.size() == 1; }
};

/// Exhaustive backtracking over distance-preserving partial maps, pruned by
/// colour refinement. Throws cap-exceeded when the graph is over the vertex
/// cap or the node budget runs out.
AutSearchResult brute_force_automorphisms(const Graph& g, const AutSearchOptions& options = {});

/// Vertex permutations of the complex that carry facets to facets.
AutSearchResult simplicial_automorphisms(const SimplicialComplex& c, const AutSearchOptions& options = {});

/// The transposition product (3-14,105)(4-13,501)(132,024)(231,420) on the
/// vertex classes of h. False when the labels collide or adjacency breaks.
bool verify_exceptional_W(const QuotientGraph& h);
Perm exceptional_W(const QuotientGraph& h);

}  // namespace heawood
