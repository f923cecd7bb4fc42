#include "tokens/enumerate.hpp"

#include <stdexcept>

#include "tokens/subsets.hpp"

namespace tokens {

std::uint64_t labeled_graph_count(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("labeled_graph_count: supported for 1 <= n <= 7");
    return std::uint64_t{1} << binom(n, 2);
}

Graph labeled_graph(int n, std::uint64_t index) {
    if (index >= labeled_graph_count(n))
        throw std::invalid_argument("labeled_graph: index out of range");
    Graph g(n);
    int bit = 0;
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u, ++bit)
            if (index & (std::uint64_t{1} << bit)) g.add_edge(u, v);
    return g;
}

std::vector<Graph> all_labeled_graphs(int n) {
    const std::uint64_t count = labeled_graph_count(n);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(labeled_graph(n, i));
    return out;
}

std::uint64_t labeled_tree_count(int n) {
    if (n < 1) throw std::invalid_argument("labeled_tree_count: need n >= 1");
    if (n > 18) throw std::invalid_argument("labeled_tree_count: n too large");
    if (n <= 2) return 1;
    std::uint64_t c = 1;
    for (int i = 0; i < n - 2; ++i) c *= static_cast<std::uint64_t>(n);
    return c;
}

Graph decode_pruefer(const std::vector<int>& seq, int n) {
    if (n < 1) throw std::invalid_argument("decode_pruefer: need n >= 1");
    if (static_cast<int>(seq.size()) != std::max(n - 2, 0))
        throw std::invalid_argument("decode_pruefer: sequence must have length n-2");
    Graph g(n);
    if (n == 1) return g;
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 1);
    for (int x : seq) {
        if (x < 1 || x > n) throw std::invalid_argument("decode_pruefer: label out of range");
        ++deg[static_cast<std::size_t>(x)];
    }
    int ptr = 1;
    while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        g.add_edge(leaf, x);
        if (--deg[static_cast<std::size_t>(x)] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n);
    return g;
}

Graph labeled_tree(int n, std::uint64_t index) {
    if (index >= labeled_tree_count(n))
        throw std::invalid_argument("labeled_tree: index out of range");
    std::vector<int> seq(static_cast<std::size_t>(std::max(n - 2, 0)));
    for (auto& x : seq) {
        x = static_cast<int>(index % static_cast<std::uint64_t>(n)) + 1;
        index /= static_cast<std::uint64_t>(n);
    }
    return decode_pruefer(seq, n);
}

std::vector<Graph> all_labeled_trees(int n) {
    const std::uint64_t count = labeled_tree_count(n);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(labeled_tree(n, i));
    return out;
}

Graph sample_graph(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_graph: need n >= 1");
    std::mt19937_64 rng(seed);
    const std::uint64_t pairs = binom(n, 2);
    // Plain modulo reduction: std::uniform_int_distribution is not
    // reproducible across standard libraries, and the tiny bias is harmless.
    const std::uint64_t m = rng() % (pairs + 1);
    std::vector<std::pair<int, int>> all;
    all.reserve(pairs);
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u) all.emplace_back(u, v);
    // Partial Fisher-Yates: the first m entries become the edge set.
    for (std::uint64_t i = 0; i < m; ++i) {
        const std::uint64_t j = i + rng() % (pairs - i);
        std::swap(all[i], all[j]);
    }
    Graph g(n);
    for (std::uint64_t i = 0; i < m; ++i) g.add_edge(all[i].first, all[i].second);
    return g;
}

}  // namespace tokens
