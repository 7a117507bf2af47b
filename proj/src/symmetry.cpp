#include "heawood/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "heawood/error.hpp"

namespace heawood {

Perm identity_perm(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::ShapeError, "permutations of different degree");
    Perm out(b.size());
    for (std::size_t v = 0; v < b.size(); ++v) out[v] = a[static_cast<std::size_t>(b[v])];
    return out;
}

Perm inverse(const Perm& p) {
    Perm out(p.size());
    for (std::size_t v = 0; v < p.size(); ++v) out[static_cast<std::size_t>(p[v])] = static_cast<int>(v);
    return out;
}

bool is_bijection(const Perm& p) {
    std::vector<char> hit(p.size(), 0);
    for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.size() || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

bool is_automorphism(const Graph& g, const Perm& p) {
    if (p.size() != g.vertex_count() || !is_bijection(p)) return false;
    for (std::size_t v = 0; v < p.size(); ++v) {
        std::vector<int> mapped;
        for (int w : g.neighbors(static_cast<int>(v))) mapped.push_back(p[static_cast<std::size_t>(w)]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != g.neighbors(p[v])) return false;
    }
    return true;
}

namespace {

template <class F>
Perm coordinate_map(const QuotientGraph& h, F&& f) {
    Perm p(h.vertex_count());
    for (std::size_t v = 0; v < p.size(); ++v) p[v] = h.index_of(f(h.keys()[v]));
    return p;
}

Perm checked(const QuotientGraph& h, Perm p, const char* what) {
    if (!is_automorphism(h.graph(), p)) throw Error(ErrorKind::Internal, std::string(what) + " does not preserve adjacency");
    return p;
}

}  // namespace

std::vector<Perm> translation_generators(const QuotientGraph& h) {
    std::vector<Perm> out;
    const int d = h.dim();
    for (int i = 1; i <= d; ++i) {
        const auto w = w_vector(static_cast<std::size_t>(i), d);
        out.push_back(checked(h,
                              coordinate_map(h,
                                             [&](const Coords& x) {
                                                 Coords y = x;
                                                 for (std::size_t a = 0; a < y.size(); ++a) y[a] += w[a];
                                                 return y;
                                             }),
                              "translation"));
    }
    return out;
}

Perm rotation_R(const QuotientGraph& h) {
    const std::int64_t c = h.dim() + 2;
    return checked(h,
                   coordinate_map(h,
                                  [&](const Coords& x) {
                                      Coords y(x.size());
                                      for (std::size_t a = 0; a < y.size(); ++a) y[a] = c - x[a];
                                      return y;
                                  }),
                   "rotation");
}

bool shift_admitted(const QuotientGraph& h, int s) {
    const auto n = static_cast<int>(h.lattice().width());
    s = static_cast<int>(floor_mod(s, n));
    if (const auto& k = h.lattice().signature()) {
        for (int i = 0; i < n; ++i)
            if ((*k)[static_cast<std::size_t>((i + s) % n)] != (*k)[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    const IntMatrix& rows = h.lattice().generators();
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        std::vector<std::int64_t> shifted(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>((i + s) % n)] = rows(r, static_cast<std::size_t>(i)).get_si();
        if (!h.lattice().contains(WCoeffs(shifted))) return false;
    }
    return true;
}

std::vector<int> admitted_shifts(const QuotientGraph& h) {
    std::vector<int> out;
    for (int s = 0; s < static_cast<int>(h.lattice().width()); ++s)
        if (shift_admitted(h, s)) out.push_back(s);
    return out;
}

std::vector<int> admitted_shifts(const KSignature& k) {
    std::vector<int> out;
    const std::size_t n = k.size();
    for (std::size_t s = 0; s < n; ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = k[(i + s) % n] == k[i];
        if (ok) out.push_back(static_cast<int>(s));
    }
    return out;
}

Perm cyclic_C(const QuotientGraph& h, int s) {
    if (!shift_admitted(h, s))
        throw Error(ErrorKind::NotAnAutomorphism, "shift by " + std::to_string(s) + " does not preserve the signature");
    const auto n = static_cast<std::int64_t>(h.lattice().width());
    const auto sh = static_cast<std::size_t>(floor_mod(s, n));
    return checked(h,
                   coordinate_map(h,
                                  [&](const Coords& x) {
                                      Coords y(x.size());
                                      for (std::size_t a = 0; a < x.size(); ++a) y[(a + sh) % x.size()] = x[a];
                                      return y;
                                  }),
                   "cyclic shift");
}

std::vector<Perm> standard_generators(const QuotientGraph& h) {
    auto gens = translation_generators(h);
    gens.push_back(rotation_R(h));
    for (int s : admitted_shifts(h))
        if (s != 0) gens.push_back(cyclic_C(h, s));
    return gens;
}

PermutationGroup::PermutationGroup(std::vector<Perm> generators, std::vector<Perm> elements)
    : gens_(std::move(generators)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
}

bool PermutationGroup::contains(const Perm& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

std::vector<std::vector<int>> PermutationGroup::orbits() const {
    if (elements_.empty()) return {};
    const std::size_t n = elements_.front().size();
    std::vector<int> owner(n, -1);
    std::vector<std::vector<int>> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (owner[v] >= 0) continue;
        std::set<int> orbit;
        for (const auto& g : elements_) orbit.insert(g[v]);
        for (int w : orbit) owner[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
        out.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}

PermutationGroup group_closure(const std::vector<Perm>& generators, std::size_t degree, std::size_t cap) {
    std::set<Perm> seen{identity_perm(degree)};
    std::deque<Perm> queue{identity_perm(degree)};
    for (const auto& g : generators)
        if (g.size() != degree || !is_bijection(g)) throw Error(ErrorKind::Validation, "generator is not a permutation");
    while (!queue.empty()) {
        const Perm p = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            Perm q = compose(g, p);
            if (seen.insert(q).second) {
                if (seen.size() > cap)
                    throw Error(ErrorKind::CapExceeded, "group closure passed " + std::to_string(cap) + " elements");
                queue.push_back(std::move(q));
            }
        }
    }
    return PermutationGroup(generators, {seen.begin(), seen.end()});
}

namespace {

std::vector<int> refine_colours(const Graph& g, const std::vector<std::vector<int>>& dist) {
    const std::size_t n = g.vertex_count();
    // Start from degree plus the distance profile.
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> profile{static_cast<int>(g.degree(static_cast<int>(v)))};
        std::vector<int> counts(n + 1, 0);
        for (std::size_t w = 0; w < n; ++w) ++counts[static_cast<std::size_t>(dist[v][w] < 0 ? static_cast<int>(n) : dist[v][w])];
        profile.insert(profile.end(), counts.begin(), counts.end());
        sig[v] = std::move(profile);
    }
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<int> colour(n);
    for (std::size_t v = 0; v < n; ++v) colour[v] = ids.at(sig[v]);

    for (;;) {
        std::map<std::vector<int>, int> fresh;
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<int> s{colour[v]};
            for (int w : g.neighbors(static_cast<int>(v))) s.push_back(colour[static_cast<std::size_t>(w)]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = std::move(s);
            fresh.emplace(sig[v], 0);
        }
        next = 0;
        for (auto& [s, id] : fresh) id = next++;
        const std::size_t before = std::set<int>(colour.begin(), colour.end()).size();
        for (std::size_t v = 0; v < n; ++v) colour[v] = fresh.at(sig[v]);
        if (fresh.size() == before) return colour;
    }
}

std::vector<std::vector<int>> all_distances(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (std::size_t s = 0; s < n; ++s) {
        std::deque<int> q{static_cast<int>(s)};
        dist[s][s] = 0;
        while (!q.empty()) {
            const int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v))
                if (dist[s][static_cast<std::size_t>(w)] < 0) {
                    dist[s][static_cast<std::size_t>(w)] = dist[s][static_cast<std::size_t>(v)] + 1;
                    q.push_back(w);
                }
        }
    }
    return dist;
}

struct Search {
    const Graph& g;
    const AutSearchOptions& opt;
    std::size_t n;
    std::vector<std::vector<int>> dist;
    std::vector<std::vector<unsigned char>> mult;
    std::vector<int> colour;
    std::vector<int> order;   // visiting order
    std::vector<int> parent;  // parent in the visiting order, or -1
    Perm image;
    std::vector<char> used;
    std::vector<int> uf;
    AutSearchResult result;

    Search(const Graph& graph, const AutSearchOptions& o) : g(graph), opt(o), n(graph.vertex_count()) {
        dist = all_distances(g);
        mult.assign(n, std::vector<unsigned char>(n, 0));
        for (std::size_t v = 0; v < n; ++v)
            for (int w : g.neighbors(static_cast<int>(v))) ++mult[v][static_cast<std::size_t>(w)];
        colour = refine_colours(g, dist);

        // Start each component at a vertex in the smallest colour class.
        std::map<int, int> class_size;
        for (int c : colour) ++class_size[c];
        std::vector<int> starts(n);
        std::iota(starts.begin(), starts.end(), 0);
        std::stable_sort(starts.begin(), starts.end(), [&](int a, int b) {
            return class_size[colour[static_cast<std::size_t>(a)]] < class_size[colour[static_cast<std::size_t>(b)]];
        });
        std::vector<char> placed(n, 0);
        parent.assign(n, -1);
        for (int s : starts) {
            if (placed[static_cast<std::size_t>(s)]) continue;
            std::deque<int> q{s};
            placed[static_cast<std::size_t>(s)] = 1;
            while (!q.empty()) {
                const int v = q.front();
                q.pop_front();
                order.push_back(v);
                for (int w : g.neighbors(v))
                    if (!placed[static_cast<std::size_t>(w)]) {
                        placed[static_cast<std::size_t>(w)] = 1;
                        parent[static_cast<std::size_t>(w)] = v;
                        q.push_back(w);
                    }
            }
        }
        image.assign(n, -1);
        used.assign(n, 0);
        uf.resize(n);
        std::iota(uf.begin(), uf.end(), 0);
    }

    int find(int v) {
        while (uf[static_cast<std::size_t>(v)] != v) v = uf[static_cast<std::size_t>(v)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(v)])];
        return v;
    }

    bool consistent(std::size_t depth, int u, int c) {
        if (colour[static_cast<std::size_t>(u)] != colour[static_cast<std::size_t>(c)] || used[static_cast<std::size_t>(c)]) return false;
        if (mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] != mult[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)]) return false;
        for (std::size_t t = 0; t < depth; ++t) {
            const auto w = static_cast<std::size_t>(order[t]);
            const auto iw = static_cast<std::size_t>(image[w]);
            if (dist[static_cast<std::size_t>(u)][w] != dist[static_cast<std::size_t>(c)][iw]) return false;
            if (mult[static_cast<std::size_t>(u)][w] != mult[static_cast<std::size_t>(c)][iw]) return false;
        }
        return true;
    }

    void leaf() {
        if (!is_automorphism(g, image)) return;
        if (opt.accept && !opt.accept(image)) return;
        ++result.order;
        for (std::size_t v = 0; v < n; ++v) {
            const int a = find(static_cast<int>(v)), b = find(image[v]);
            if (a != b) uf[static_cast<std::size_t>(a)] = b;
        }
        if (opt.collect) result.elements.push_back(image);
    }

    void run(std::size_t depth) {
        if (depth == n) {
            leaf();
            return;
        }
        const int u = order[depth];
        const int p = parent[static_cast<std::size_t>(u)];
        auto attempt = [&](int c) {
            if (++result.nodes > opt.node_budget)
                throw Error(ErrorKind::CapExceeded, "automorphism search passed its node budget");
            if (!consistent(depth, u, c)) return;
            image[static_cast<std::size_t>(u)] = c;
            used[static_cast<std::size_t>(c)] = 1;
            run(depth + 1);
            used[static_cast<std::size_t>(c)] = 0;
            image[static_cast<std::size_t>(u)] = -1;
        };
        if (p >= 0) {
            const auto& nb = g.neighbors(image[static_cast<std::size_t>(p)]);
            for (std::size_t i = 0; i < nb.size(); ++i)
                if (i == 0 || nb[i] != nb[i - 1]) attempt(nb[i]);
        } else {
            for (std::size_t c = 0; c < n; ++c) attempt(static_cast<int>(c));
        }
    }
};

}  // namespace

AutSearchResult brute_force_automorphisms(const Graph& g, const AutSearchOptions& options) {
    if (g.vertex_count() > options.vertex_cap)
        throw Error(ErrorKind::CapExceeded, "graph has " + std::to_string(g.vertex_count()) +
                                                " vertices, over the search cap of " + std::to_string(options.vertex_cap));
    Search s(g, options);
    s.run(0);
    std::map<int, std::vector<int>> groups;
    for (std::size_t v = 0; v < s.n; ++v) groups[s.find(static_cast<int>(v))].push_back(static_cast<int>(v));
    for (auto& [root, members] : groups) s.result.orbits.push_back(std::move(members));
    std::sort(s.result.orbits.begin(), s.result.orbits.end());
    std::sort(s.result.elements.begin(), s.result.elements.end());
    return std::move(s.result);
}

AutSearchResult simplicial_automorphisms(const SimplicialComplex& c, const AutSearchOptions& options) {
    const std::set<std::vector<int>> facets(c.facets().begin(), c.facets().end());
    AutSearchOptions opt = options;
    opt.accept = [&](const Perm& p) {
        for (const auto& f : c.facets()) {
            std::vector<int> img;
            for (int v : f) img.push_back(p[static_cast<std::size_t>(v)]);
            std::sort(img.begin(), img.end());
            if (!facets.count(img)) return false;
        }
        return !options.accept || options.accept(p);
    };
    return brute_force_automorphisms(c.one_skeleton(), opt);
}

Perm exceptional_W(const QuotientGraph& h) {
    if (h.dim() != 2) throw Error(ErrorKind::UnsupportedDimension, "the exceptional map lives on a d = 2 graph");
    const std::vector<std::pair<Coords, Coords>> swaps{
        {{3, -1, 4}, {1, 0, 5}}, {{4, -1, 3}, {5, 0, 1}}, {{1, 3, 2}, {0, 2, 4}}, {{2, 3, 1}, {4, 2, 0}}};
    Perm p = identity_perm(h.vertex_count());
    std::set<int> touched;
    for (const auto& [a, b] : swaps) {
        const int ia = h.index_of(a), ib = h.index_of(b);
        if (!touched.insert(ia).second || !touched.insert(ib).second)
            throw Error(ErrorKind::NotAnAutomorphism, "listed vertices collide in this quotient");
        std::swap(p[static_cast<std::size_t>(ia)], p[static_cast<std::size_t>(ib)]);
    }
    return p;
}

bool verify_exceptional_W(const QuotientGraph& h) {
    try {
        return is_automorphism(h.graph(), exceptional_W(h));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotAnAutomorphism || e.kind() == ErrorKind::UnsupportedDimension) return false;
        throw;
    }
}

}  // namespace heawood
