#include "heawood/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "heawood/error.hpp"

namespace heawood {

BipartiteResult is_bipartite(const Graph& g) {
    const std::size_t n = g.vertex_count();
    BipartiteResult r;
    std::vector<int> side(n, -1), parent(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<int> q{static_cast<int>(s)};
        while (!q.empty()) {
            const int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v)) {
                const auto wi = static_cast<std::size_t>(w);
                if (side[wi] < 0) {
                    side[wi] = 1 - side[static_cast<std::size_t>(v)];
                    parent[wi] = v;
                    q.push_back(w);
                } else if (side[wi] == side[static_cast<std::size_t>(v)]) {
                    // Tree paths from v and w up to their common ancestor,
                    // plus the edge vw, close an odd cycle.
                    std::vector<int> pv{v}, pw{w};
                    while (parent[static_cast<std::size_t>(pv.back())] >= 0) pv.push_back(parent[static_cast<std::size_t>(pv.back())]);
                    while (parent[static_cast<std::size_t>(pw.back())] >= 0) pw.push_back(parent[static_cast<std::size_t>(pw.back())]);
                    while (pv.size() > 1 && pw.size() > 1 && pv[pv.size() - 2] == pw[pw.size() - 2]) {
                        pv.pop_back();
                        pw.pop_back();
                    }
                    r.odd_cycle = pv;
                    for (std::size_t i = pw.size() - 1; i-- > 0;) r.odd_cycle.push_back(pw[i]);
                    std::reverse(r.odd_cycle.begin(), r.odd_cycle.end());
                    return r;
                }
            }
        }
    }
    r.bipartite = true;
    r.colouring = std::move(side);
    return r;
}

std::string to_string(CycleKind k) {
    switch (k) {
        case CycleKind::HexagonFace: return "hexagon-face";
        case CycleKind::SquareFace: return "square-face";
        case CycleKind::Other: return "other";
    }
    return "other";
}

std::vector<std::vector<int>> cycles_through(const Graph& g, int v, int length) {
    if (length < 3) throw Error(ErrorKind::Validation, "cycle length must be at least 3");
    std::set<std::vector<int>> out;
    std::vector<int> path{v};
    std::vector<char> used(g.vertex_count(), 0);
    used[static_cast<std::size_t>(v)] = 1;
    auto rec = [&](auto&& self) -> void {
        const int last = path.back();
        const auto& nb = g.neighbors(last);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const int w = nb[i];
            if (i > 0 && nb[i - 1] == w) continue;
            if (static_cast<int>(path.size()) == length) {
                if (w == v && path[1] < path.back()) out.insert(path);
                continue;
            }
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            self(self);
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    rec(rec);
    return {out.begin(), out.end()};
}

std::vector<CycleReport> classify_cycles(const QuotientGraph& h, const std::vector<std::vector<int>>& cycles) {
    const auto faces = two_face_vertex_sets(h);
    std::vector<CycleReport> out;
    for (const auto& c : cycles) {
        CycleReport r{c, CycleKind::Other};
        std::vector<int> sorted(c);
        std::sort(sorted.begin(), sorted.end());
        if (std::binary_search(faces.begin(), faces.end(), sorted)) {
            if (c.size() == 6) r.kind = CycleKind::HexagonFace;
            else if (c.size() == 4) r.kind = CycleKind::SquareFace;
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CycleReport> six_cycles_through(const QuotientGraph& h, int v) {
    return classify_cycles(h, cycles_through(h.graph(), v, 6));
}

std::string to_string(WalkOutcome o) {
    switch (o) {
        case WalkOutcome::HamiltonianCycle: return "hamiltonian-cycle";
        case WalkOutcome::PrematureClosure: return "premature-closure";
        case WalkOutcome::NoneFound: return "none-found";
        case WalkOutcome::Indeterminate: return "indeterminate";
    }
    return "none-found";
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle) {
    if (cycle.size() != g.vertex_count() || cycle.size() < 3) return false;
    std::vector<char> seen(cycle.size(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int v = cycle[i];
        if (v < 0 || static_cast<std::size_t>(v) >= seen.size() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
        if (!g.has_edge(v, cycle[(i + 1) % cycle.size()])) return false;
    }
    return true;
}

HamiltonianWalkResult hamiltonian_alternating(const QuotientGraph& h, int i) {
    const int n = static_cast<int>(h.lattice().width());
    if (i < 1 || i > n) throw Error(ErrorKind::IndexOutOfRange, "walk index must lie in 1..d+1");
    const auto a = static_cast<std::size_t>(i - 1);
    const auto next = static_cast<std::size_t>(i % n);
    const auto prev = static_cast<std::size_t>((i - 2 + n) % n);

    HamiltonianWalkResult r;
    r.mode = "alternating";
    r.i = i;
    r.vertices = h.vertex_count();
    Coords x(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) x[static_cast<std::size_t>(t)] = t + 1;
    std::vector<char> seen(h.vertex_count(), 0);
    int current = h.index_of(x);
    const int start = current;
    for (std::size_t step = 0;; ++step) {
        seen[static_cast<std::size_t>(current)] = 1;
        r.walk.push_back(current);
        ++x[a];
        --x[step % 2 == 0 ? next : prev];
        if (!is_tiling_vertex(x))
            throw Error(ErrorKind::InvalidWalk, "move " + std::to_string(step + 1) + " of the alternating walk is not an edge");
        const int nxt = h.index_of(x);
        if (!h.graph().has_edge(current, nxt)) throw Error(ErrorKind::Internal, "walk left the graph");
        current = nxt;
        if (seen[static_cast<std::size_t>(current)]) break;
    }
    r.length = r.walk.size();
    r.closed_at_start = current == start;
    if (r.closed_at_start && r.length == h.vertex_count() && is_hamiltonian_cycle(h.graph(), r.walk))
        r.outcome = WalkOutcome::HamiltonianCycle;
    else
        r.outcome = WalkOutcome::PrematureClosure;
    return r;
}

HamiltonianWalkResult hamiltonian_backtracking(const Graph& g, std::uint64_t budget) {
    HamiltonianWalkResult r;
    r.mode = "backtracking";
    const std::size_t n = g.vertex_count();
    r.vertices = n;
    if (n < 3) {
        r.outcome = WalkOutcome::NoneFound;
        return r;
    }
    std::vector<char> used(n, 0);
    std::vector<int> path{0};
    used[0] = 1;
    bool found = false;
    bool exhausted_budget = false;

    auto free_degree = [&](int v) {
        int c = 0;
        for (int w : g.neighbors(v))
            if (!used[static_cast<std::size_t>(w)]) ++c;
        return c;
    };
    // Every unvisited vertex still needs two edges into unvisited vertices or
    // the two path ends.
    auto viable = [&] {
        const int head = path.back();
        for (std::size_t u = 0; u < n; ++u) {
            if (used[u]) continue;
            int c = 0;
            for (int w : g.neighbors(static_cast<int>(u)))
                if (!used[static_cast<std::size_t>(w)] || w == head || w == path.front()) ++c;
            if (c < 2) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self) -> void {
        if (found || exhausted_budget) return;
        if (++r.nodes > budget) {
            exhausted_budget = true;
            return;
        }
        const int head = path.back();
        if (path.size() == n) {
            if (g.has_edge(head, path.front())) found = true;
            return;
        }
        if (!viable()) return;
        std::vector<std::pair<int, int>> options;
        for (int w : g.neighbors(head))
            if (!used[static_cast<std::size_t>(w)]) options.emplace_back(free_degree(w), w);
        std::sort(options.begin(), options.end());
        options.erase(std::unique(options.begin(), options.end()), options.end());
        for (const auto& [deg, w] : options) {
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            self(self);
            if (found || exhausted_budget) return;
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    rec(rec);
    if (found) {
        if (!is_hamiltonian_cycle(g, path)) throw Error(ErrorKind::Internal, "search returned an invalid cycle");
        r.outcome = WalkOutcome::HamiltonianCycle;
        r.walk = path;
        r.length = path.size();
        r.closed_at_start = true;
    } else {
        r.outcome = exhausted_budget ? WalkOutcome::Indeterminate : WalkOutcome::NoneFound;
    }
    return r;
}

namespace {

struct Colouring {
    const Graph& g;
    std::size_t n;
    std::vector<int> colour;
    std::vector<std::vector<int>> seen;  // seen[v][c]: neighbours of v coloured c
    std::vector<int> saturation;
    std::vector<int> best;
    int best_count;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    bool out_of_budget = false;

    Colouring(const Graph& graph, int upper, std::vector<int> initial, std::uint64_t b)
        : g(graph), n(graph.vertex_count()), colour(n, -1), seen(n, std::vector<int>(n + 1, 0)), saturation(n, 0),
          best(std::move(initial)), best_count(upper), budget(b) {}

    void set(int v, int c, int delta) {
        for (int w : g.neighbors(v)) {
            auto& s = seen[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)];
            if (delta > 0 && s++ == 0) ++saturation[static_cast<std::size_t>(w)];
            if (delta < 0 && --s == 0) --saturation[static_cast<std::size_t>(w)];
        }
    }

    int pick() const {
        int best_v = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (colour[v] >= 0) continue;
            if (best_v < 0 || saturation[v] > saturation[static_cast<std::size_t>(best_v)] ||
                (saturation[v] == saturation[static_cast<std::size_t>(best_v)] && g.degree(static_cast<int>(v)) > g.degree(best_v)))
                best_v = static_cast<int>(v);
        }
        return best_v;
    }

    void search(std::size_t coloured, int used, int stop_at) {
        if (out_of_budget || best_count <= stop_at) return;
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        if (coloured == n) {
            best = colour;
            best_count = used;
            return;
        }
        const int v = pick();
        const int limit = std::min(used + 1, best_count - 1);
        for (int c = 0; c < limit; ++c) {
            if (seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)]) continue;
            colour[static_cast<std::size_t>(v)] = c;
            set(v, c, +1);
            search(coloured + 1, std::max(used, c + 1), stop_at);
            set(v, c, -1);
            colour[static_cast<std::size_t>(v)] = -1;
            if (out_of_budget || best_count <= stop_at) return;
        }
    }
};

std::vector<int> dsatur(const Graph& g) {
    Colouring c(g, 0, {}, 0);
    for (std::size_t k = 0; k < g.vertex_count(); ++k) {
        const int v = c.pick();
        int col = 0;
        while (c.seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(col)]) ++col;
        c.colour[static_cast<std::size_t>(v)] = col;
        c.set(v, col, +1);
    }
    return c.colour;
}

int greedy_clique(const Graph& g) {
    int best = g.vertex_count() ? 1 : 0;
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> clique{static_cast<int>(s)};
        std::vector<int> cand(g.neighbors(static_cast<int>(s)));
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::sort(cand.begin(), cand.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        for (int w : cand) {
            if (w == static_cast<int>(s)) continue;
            if (std::all_of(clique.begin(), clique.end(), [&](int u) { return g.has_edge(u, w); })) clique.push_back(w);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

}  // namespace

ChromaticResult chromatic_number(const Graph& g, std::size_t cap, std::uint64_t budget) {
    ChromaticResult r;
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        r.exact = true;
        return r;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (g.has_edge(static_cast<int>(v), static_cast<int>(v))) throw Error(ErrorKind::Validation, "a loop cannot be coloured");
    r.colouring = dsatur(g);
    r.upper = *std::max_element(r.colouring.begin(), r.colouring.end()) + 1;
    r.lower = greedy_clique(g);
    if (r.lower < 2 && g.edge_count() > 0) r.lower = 2;
    if (is_bipartite(g).bipartite) r.lower = r.upper = std::min(r.upper, g.edge_count() ? 2 : 1);
    if (r.lower == r.upper) {
        if (r.upper <= 2 && g.edge_count() > 0) {
            r.colouring = is_bipartite(g).colouring;
        }
        r.exact = true;
        return r;
    }
    if (n > cap) return r;
    Colouring search(g, r.upper, r.colouring, budget);
    search.search(0, 0, r.lower);
    r.nodes = search.nodes;
    r.upper = search.best_count;
    r.colouring = search.best;
    if (!search.out_of_budget) r.lower = r.upper;
    r.exact = r.lower == r.upper;
    return r;
}

Integer heawood_number(const Integer& p) {
    if (p < 0) throw Error(ErrorKind::Validation, "genus must be nonnegative");
    Integer root;
    const Integer inner = 1 + 48 * p;
    mpz_sqrt(root.get_mpz_t(), inner.get_mpz_t());
    // sqrt is irrational unless inner is a square; either way the floor of
    // (7 + sqrt) / 2 equals (7 + isqrt) / 2 rounded down.
    return (7 + root) / 2;
}

}  // namespace heawood
