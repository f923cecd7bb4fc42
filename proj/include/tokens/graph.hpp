#pragma once

#include <utility>
#include <vector>

namespace tokens {

// Undirected simple graph on vertices labeled 1..n. Neighbor lists are kept
// sorted so edge iteration order is deterministic everywhere.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);  // no-op if already present; rejects loops

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;

    // Edges as (u,v) with u < v, ordered lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;
    bool is_tree() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;  // adj_[v-1], sorted labels
};

Graph complement(const Graph& g);

// Removes vertex v; the remaining vertices are relabeled 1..n-1 preserving
// their relative order.
Graph delete_vertex(const Graph& g, int v);

// Contracts edge {u,v} into min(u,v), discards any parallel edges/loops, and
// relabels the survivors 1..n-1 preserving order.
Graph collapse_edge(const Graph& g, int u, int v);

}  // namespace tokens
