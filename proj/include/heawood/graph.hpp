#pragma once

#include <cstddef>
#include <vector>

namespace heawood {

/// Undirected multigraph on 0..n-1 stored as adjacency lists. Parallel edges
/// appear once per copy in each endpoint's list.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}
    explicit Graph(std::vector<std::vector<int>> adjacency);

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept;
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::vector<int>>& adjacency() const noexcept { return adj_; }
    std::size_t degree(int v) const { return neighbors(v).size(); }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    /// No loops and no parallel edges.
    bool is_simple() const;
    bool is_regular(std::size_t degree) const;
    bool is_connected() const;
    /// Each edge once as (u, v) with u <= v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<int>> adj_;
};

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);

}  // namespace heawood
