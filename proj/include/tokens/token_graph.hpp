#pragma once

#include <cstdint>
#include <vector>

#include "tokens/graph.hpp"
#include "tokens/matrix.hpp"
#include "tokens/subsets.hpp"

namespace tokens {

// Default ceiling on binom(n,k): past ~10^5 vertices the dense spectral work
// downstream is hopeless anyway, so refuse early and loudly.
inline constexpr std::uint64_t kDefaultVertexGuard = 100000;

// The k-token graph of a source graph: vertices are the k-subsets of the
// source's vertex set in colex order, and two subsets are adjacent when they
// differ by sliding one token along a source edge.
struct TokenGraph {
    Graph graph;      // on binom(n,k) vertices, labeled 1..binom(n,k)
    int source_n = 0;
    int k = 0;

    SubsetIndex index() const { return SubsetIndex(source_n, k); }
    // Subset carried by a token-graph vertex (1-based); elements ascending.
    const std::vector<int>& label(int vertex) const;
    const std::vector<std::vector<int>>& labels() const { return labels_; }

    std::vector<std::vector<int>> labels_;  // filled by token_graph()
};

TokenGraph token_graph(const Graph& g, int k,
                       std::uint64_t guard = kDefaultVertexGuard);

// The 0/1 matrix with one row per k-subset and one column per source vertex,
// marking membership. Lifts source-space vectors to token space (apply) and
// projects back (apply_transpose).
class BinomialMatrix {
public:
    BinomialMatrix(int n, int k);

    std::uint64_t rows() const { return static_cast<std::uint64_t>(labels_.size()); }
    int cols() const { return n_; }
    double entry(std::uint64_t row, int col) const;  // col is 0-based

    std::vector<double> apply(const std::vector<double>& v) const;
    std::vector<double> apply_transpose(const std::vector<double>& u) const;
    Matrix dense() const;

private:
    int n_;
    int k_;
    std::vector<std::vector<int>> labels_;
};

// Splits a token graph by one source vertex a: the induced subgraph on
// subsets containing a, and the one on subsets avoiding a. Both come back
// relabeled so that they are *identical* (not merely isomorphic) to the
// token graphs of the source with a deleted, at levels k-1 and k.
struct TokenRestriction {
    Graph with_element;
    Graph without_element;
    // Position i (1-based vertex of the restricted graph) -> vertex of the
    // original token graph it came from.
    std::vector<int> with_vertices;
    std::vector<int> without_vertices;
};

TokenRestriction restrict_by_element(const TokenGraph& t, int a);

}  // namespace tokens
