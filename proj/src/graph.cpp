#include "heawood/graph.hpp"

#include <algorithm>
#include <queue>

#include "heawood/error.hpp"

namespace heawood {

Graph::Graph(std::vector<std::vector<int>> adjacency) : adj_(std::move(adjacency)) {
    const auto n = static_cast<int>(adj_.size());
    for (auto& row : adj_) {
        for (int w : row)
            if (w < 0 || w >= n) throw Error(ErrorKind::IndexOutOfRange, "neighbour index out of range");
        std::sort(row.begin(), row.end());
    }
}

std::size_t Graph::edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& row : adj_) total += row.size();
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    const auto n = static_cast<int>(adj_.size());
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::IndexOutOfRange, "edge endpoint out of range");
    auto& a = adj_[static_cast<std::size_t>(u)];
    a.insert(std::upper_bound(a.begin(), a.end(), v), v);
    auto& b = adj_[static_cast<std::size_t>(v)];
    b.insert(std::upper_bound(b.begin(), b.end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = neighbors(u);
    return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::is_simple() const {
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        const auto& row = adj_[v];
        if (std::adjacent_find(row.begin(), row.end()) != row.end()) return false;
        if (std::binary_search(row.begin(), row.end(), static_cast<int>(v))) return false;
    }
    return true;
}

bool Graph::is_regular(std::size_t degree) const {
    return std::all_of(adj_.begin(), adj_.end(), [&](const auto& row) { return row.size() == degree; });
}

bool Graph::is_connected() const {
    if (adj_.empty()) return true;
    std::vector<char> seen(adj_.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : adj_[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == adj_.size();
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        bool loop_half = false;
        for (int v : adj_[u]) {
            if (v > static_cast<int>(u)) out.emplace_back(static_cast<int>(u), v);
            // A loop shows up twice in its own list.
            if (v == static_cast<int>(u)) {
                if (loop_half) out.emplace_back(v, v);
                loop_half = !loop_half;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph cycle_graph(int n) {
    Graph g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace heawood
