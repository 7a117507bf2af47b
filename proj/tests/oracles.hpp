#pragma once

// Brute-force reference computations used only by the tests. Each one works
// straight from a definition and shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

// Laplace expansion along the first row.
inline long long cofactor_det(const Mat& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        Mat minor;
        for (std::size_t r = 1; r < n; ++r) {
            Vec row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[r][j]);
            minor.push_back(row);
        }
        const long long term = m[0][c] * cofactor_det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

inline Mat mk(const Vec& k) {
    const std::size_t n = k.size();
    Mat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = k[i] + 1;
        m[i][(i + 1) % n] -= k[(i + 1) % n];
    }
    return m;
}

// Vertex of the tiling: coordinate sum 1+...+n and one coordinate in every
// residue class mod n.
inline bool tiling_vertex(const Vec& x) {
    const auto n = static_cast<std::int64_t>(x.size());
    if (std::accumulate(x.begin(), x.end(), std::int64_t{0}) != n * (n + 1) / 2) return false;
    std::set<std::int64_t> res;
    for (auto v : x) res.insert(((v % n) + n) % n);
    return static_cast<std::int64_t>(res.size()) == n;
}

// Every e_j - e_i move that lands on a tiling vertex.
inline std::set<Vec> definitional_neighbors(const Vec& x) {
    std::set<Vec> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (i == j) continue;
            Vec y = x;
            --y[i];
            ++y[j];
            if (tiling_vertex(y)) out.insert(y);
        }
    return out;
}

inline bool is_permutation_of_1n(Vec v) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != static_cast<std::int64_t>(i) + 1) return false;
    return true;
}

inline std::int64_t stirling2_table(int n, int m) {
    std::vector<std::vector<std::int64_t>> s(n + 1, std::vector<std::int64_t>(n + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return m <= n ? s[n][m] : 0;
}

// Number of simple cycles of a given length through v, each counted once.
inline int count_cycles_through(const std::vector<std::vector<int>>& adj, int v, int len) {
    std::set<std::vector<int>> seen;
    std::vector<int> path{v};
    std::vector<char> used(adj.size(), 0);
    used[v] = 1;
    auto rec = [&](auto&& self) -> void {
        const int last = path.back();
        if (static_cast<int>(path.size()) == len) {
            for (int w : adj[last])
                if (w == v) {
                    std::vector<int> key(path.begin() + 1, path.end());
                    std::vector<int> rev(key.rbegin(), key.rend());
                    seen.insert(std::min(key, rev));
                }
            return;
        }
        for (int w : adj[last]) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            self(self);
            path.pop_back();
            used[w] = 0;
        }
    };
    rec(rec);
    return static_cast<int>(seen.size());
}

}  // namespace oracle

namespace oracle {

// a lies in the row span of a nonsingular square M iff a * adj(M) is
// divisible by det(M) entrywise.
inline bool in_row_span_square(const Mat& m, const Vec& a) {
    const std::size_t n = m.size();
    const long long d = cofactor_det(m);
    for (std::size_t j = 0; j < n; ++j) {
        long long s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            // adj(M)[i][j] = (-1)^{i+j} * minor(j, i)
            Mat minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                Vec row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(m[r][c]);
                minor.push_back(row);
            }
            const long long cof = ((i + j) % 2 == 0 ? 1 : -1) * cofactor_det(minor);
            s += a[i] * cof;
        }
        if (s % d != 0) return false;
    }
    return true;
}

}  // namespace oracle
