#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace gcg {

struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    explicit Graph(int n_ = 0) : n(n_), adj(n_) {}
    int add_vertex()
    {
        adj.emplace_back();
        return n++;
    }
    void add_edge(int u, int v)
    {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    bool has_edge(int u, int v) const;
    std::size_t edge_count() const;
    // Sorts adjacency lists so traversal order is canonical.
    void normalize();
};

// length < 0 means no cycle.
struct CycleResult {
    long long length = -1;
    std::vector<int> cycle;
};

CycleResult shortest_cycle(const Graph& g);
std::vector<int> bfs_dist(const Graph& g, int src);
std::vector<int> component_ids(const Graph& g);
std::vector<int> articulation_points(const Graph& g);

struct WeightedGraph {
    int n = 0;
    std::vector<std::vector<std::pair<int, long long>>> adj;
    explicit WeightedGraph(int n_ = 0) : n(n_), adj(n_) {}
    void add_edge(int u, int v, long long w)
    {
        adj[u].push_back({v, w});
        adj[v].push_back({u, w});
    }
};

// Minimum total weight of an embedded cycle.
CycleResult weighted_shortest_cycle(const WeightedGraph& g);

// A cycle of length in [min_len, max_len] without a diagonal, if any.
std::optional<std::vector<int>> find_chordless_cycle(const Graph& g, int min_len, int max_len);

// All embedded cycles with at most max_len vertices, each listed once,
// starting from its least vertex. Stops after cap cycles.
std::vector<std::vector<int>> enumerate_cycles(const Graph& g, int max_len, std::size_t cap);

// Vertex map a -> b, if the graphs are isomorphic. Optional colours must be
// preserved by the map.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b,
                                                 const std::vector<int>* colour_a = nullptr,
                                                 const std::vector<int>* colour_b = nullptr);

}  // namespace gcg
