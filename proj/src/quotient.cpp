#include "heawood/quotient.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "heawood/error.hpp"

namespace heawood {

Coords vertex_key(std::span<const std::int64_t> x, const Sublattice& lattice) {
    if (!is_tiling_vertex(x)) throw Error(ErrorKind::Validation, "not a vertex of the tiling");
    if (x.size() != lattice.width()) throw Error(ErrorKind::ShapeError, "vertex length does not match lattice");
    const Coords p = base_permutation(x);
    Coords v(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) v[a] = x[a] - p[a];
    const auto shift = to_ambient(lattice.reduce(from_ambient(v)));
    Coords key(p);
    for (std::size_t a = 0; a < key.size(); ++a) key[a] += shift[a];
    return key;
}

Coords vertex_key(std::span<const std::int64_t> x, const KSignature& k) {
    return vertex_key(x, Sublattice::from_signature(k));
}

QuotientGraph::QuotientGraph(Sublattice lattice, std::vector<Coords> keys, Graph graph)
    : lattice_(std::move(lattice)), keys_(std::move(keys)), graph_(std::move(graph)) {
    for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], static_cast<int>(i));
}

bool QuotientGraph::delta_mode() const noexcept {
    return !lattice_.signature() || lattice_.signature()->is_delta();
}

std::string QuotientGraph::tag() const {
    if (lattice_.signature()) return lattice_.signature()->to_string();
    return lattice_.generators().to_string();
}

std::optional<int> QuotientGraph::find(std::span<const std::int64_t> x) const {
    auto it = index_.find(vertex_key(x, lattice_));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int QuotientGraph::index_of(std::span<const std::int64_t> x) const {
    auto v = find(x);
    if (!v) throw Error(ErrorKind::Internal, "vertex class missing from the quotient");
    return *v;
}

std::string QuotientGraph::label(int v) const {
    std::string s;
    for (auto c : key(v)) {
        if (!s.empty()) s += ',';
        s += std::to_string(c);
    }
    return s;
}

QuotientGraph build_quotient(const Sublattice& lattice) {
    const int n = static_cast<int>(lattice.width());
    Coords seed(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) seed[static_cast<std::size_t>(a)] = a + 1;

    std::map<Coords, int> found;
    std::vector<Coords> order;
    std::deque<Coords> queue;
    auto visit = [&](const Coords& key) {
        if (found.emplace(key, static_cast<int>(order.size())).second) {
            order.push_back(key);
            queue.push_back(key);
        }
    };
    visit(vertex_key(seed, lattice));
    std::vector<std::vector<Coords>> nb_keys;
    while (!queue.empty()) {
        const Coords x = queue.front();
        queue.pop_front();
        std::vector<Coords> row;
        for (const auto& y : neighbors(x)) {
            row.push_back(vertex_key(y, lattice));
            visit(row.back());
        }
        nb_keys.push_back(std::move(row));
    }
    // BFS order matches `order`; relabel lexicographically.
    std::vector<Coords> keys;
    keys.reserve(found.size());
    for (const auto& [key, idx] : found) keys.push_back(key);
    std::map<Coords, int> final_index;
    for (std::size_t i = 0; i < keys.size(); ++i) final_index.emplace(keys[i], static_cast<int>(i));
    std::vector<std::vector<int>> adj(keys.size());
    for (std::size_t b = 0; b < order.size(); ++b) {
        auto& row = adj[static_cast<std::size_t>(final_index.at(order[b]))];
        for (const auto& y : nb_keys[b]) row.push_back(final_index.at(y));
    }
    return QuotientGraph(lattice, std::move(keys), Graph(std::move(adj)));
}

QuotientGraph build_heawood_graph(const KSignature& k) { return build_quotient(Sublattice::from_signature(k)); }

QuotientGraph build_general_quotient(const IntMatrix& rows, bool any_dimension) {
    if (!any_dimension && rows.cols() != 3)
        throw Error(ErrorKind::UnsupportedDimension, "general matrices are limited to d = 2");
    return build_quotient(Sublattice::from_rows(rows));
}

std::vector<std::vector<int>> torus_facet_multisets(const QuotientGraph& h) {
    const auto reps = h.lattice().representatives();
    std::vector<std::vector<int>> facets;
    facets.reserve(h.vertex_count());
    for (const auto& x : h.keys()) {
        std::vector<int> facet;
        for (const auto& v : tiles_containing(x)) {
            const WCoeffs r = h.lattice().reduce(v);
            auto it = std::lower_bound(reps.begin(), reps.end(), r);
            if (it == reps.end() || !(*it == r)) throw Error(ErrorKind::Internal, "tile class not enumerated");
            facet.push_back(static_cast<int>(it - reps.begin()));
        }
        std::sort(facet.begin(), facet.end());
        facets.push_back(std::move(facet));
    }
    return facets;
}

bool torus_is_simplicial(const QuotientGraph& h) {
    const auto facets = torus_facet_multisets(h);
    std::set<std::vector<int>> seen;
    for (const auto& f : facets) {
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) return false;
        if (!seen.insert(f).second) return false;
    }
    return true;
}

SimplicialComplex build_torus_complex(const QuotientGraph& h) {
    const auto reps = h.lattice().representatives();
    std::vector<std::string> labels;
    for (const auto& r : reps) labels.push_back(r.to_string());
    return SimplicialComplex(reps.size(), torus_facet_multisets(h), std::move(labels));
}

SimplicialComplex build_torus_complex(const KSignature& k) { return build_torus_complex(build_heawood_graph(k)); }

Integer stirling2(int n, int m) {
    if (n < 0 || m < 0 || m > n) return 0;
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1, Integer(0));
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 0; --j)
            row[static_cast<std::size_t>(j)] =
                j == 0 ? Integer(0) : Integer(j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1]);
    return row[static_cast<std::size_t>(m)];
}

Integer stirling2_explicit(int n, int m) {
    if (n < 0 || m < 0 || m > n) return 0;
    Integer total = 0;
    Integer binom = 1;
    for (int j = 0; j <= m; ++j) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(m - j), static_cast<unsigned long>(n));
        total += (j % 2 == 0 ? 1 : -1) * binom * power;
        binom = binom * (m - j) / (j + 1);
    }
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
    return total / fact;
}

std::vector<Integer> fvector_factors(int d) {
    std::vector<Integer> out;
    Integer fact = 1;
    for (int i = 0; i <= d; ++i) {
        if (i > 0) fact *= i;
        out.push_back(fact * stirling2(d + 1, i + 1));
    }
    return out;
}

std::vector<Integer> fvector_formula(const KSignature& k) {
    auto f = fvector_factors(k.dim());
    const Integer dk = k.dk();
    for (auto& x : f) x *= dk;
    return f;
}

std::vector<TilingFace> canonical_faces(const QuotientGraph& h, int blocks) {
    const int n = static_cast<int>(h.lattice().width());
    std::set<TilingFace> out;
    const auto parts = ordered_partitions(n, blocks);
    for (const auto& v : h.lattice().representatives())
        for (const auto& p : parts) {
            TilingFace f = canonical_face({p, v});
            f.offset = h.lattice().reduce(f.offset);
            out.insert(std::move(f));
        }
    return {out.begin(), out.end()};
}

std::vector<std::int64_t> canonical_face_census(const QuotientGraph& h) {
    const int n = static_cast<int>(h.lattice().width());
    std::vector<std::int64_t> census;
    for (int m = 1; m <= n; ++m) census.push_back(static_cast<std::int64_t>(canonical_faces(h, m).size()));
    return census;
}

std::vector<std::vector<int>> two_face_vertex_sets(const QuotientGraph& h) {
    const int n = static_cast<int>(h.lattice().width());
    // A face with m blocks has dimension n - m.
    std::set<std::vector<int>> out;
    for (const auto& f : canonical_faces(h, n - 2)) {
        std::vector<int> ids;
        for (const auto& x : face_vertices(f)) ids.push_back(h.index_of(x));
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        out.insert(std::move(ids));
    }
    return {out.begin(), out.end()};
}

}  // namespace heawood
