#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tokens/graph.hpp"

namespace tokens {

// Deterministic corpora with O(1) random access by index, so sweeps can be
// sharded and resumed without materializing anything.

// All 2^binom(n,2) labeled graphs on n vertices; index bits select edges in
// the same column-major pair order graph6 uses. Guarded at n <= 7.
std::uint64_t labeled_graph_count(int n);
Graph labeled_graph(int n, std::uint64_t index);
std::vector<Graph> all_labeled_graphs(int n);

// All n^(n-2) labeled trees via Pruefer sequences; the index is read as a
// base-n numeral giving the sequence (least significant digit first).
std::uint64_t labeled_tree_count(int n);
Graph labeled_tree(int n, std::uint64_t index);
std::vector<Graph> all_labeled_trees(int n);

Graph decode_pruefer(const std::vector<int>& seq, int n);

// Seeded random graph: edge count uniform in 0..binom(n,2), then that many
// distinct pairs. Same seed, same graph, on any platform.
Graph sample_graph(int n, std::uint64_t seed);

}  // namespace tokens
