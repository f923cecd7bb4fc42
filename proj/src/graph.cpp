#include "tokens/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tokens {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw std::invalid_argument("graph order must be >= 0");
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u - 1];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    auto& nu = adj_[u - 1];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;
    nu.insert(it, v);
    auto& nv = adj_[v - 1];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++m_;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v - 1];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v - 1].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 1; u <= n_; ++u)
        for (int v : adj_[u - 1])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{1};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj_[u - 1]) {
            if (!seen[v - 1]) {
                seen[v - 1] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n_;
}

bool Graph::is_tree() const { return n_ >= 1 && m_ == n_ - 1 && is_connected(); }

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph h(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

Graph delete_vertex(const Graph& g, int v) {
    const int n = g.vertex_count();
    if (v < 1 || v > n) throw std::invalid_argument("delete_vertex: vertex out of range");
    if (n == 1) return Graph(0);
    auto relabel = [v](int x) { return x < v ? x : x - 1; };
    Graph h(n - 1);
    for (auto [a, b] : g.edges())
        if (a != v && b != v) h.add_edge(relabel(a), relabel(b));
    return h;
}

Graph collapse_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("collapse_edge: {u,v} is not an edge");
    const int keep = std::min(u, v);
    const int drop = std::max(u, v);
    const int n = g.vertex_count();
    auto relabel = [drop, keep](int x) {
        if (x == drop) x = keep;
        return x < drop ? x : x - 1;
    };
    Graph h(n - 1);
    for (auto [a, b] : g.edges()) {
        int ra = relabel(a);
        int rb = relabel(b);
        if (ra != rb) h.add_edge(ra, rb);
    }
    return h;
}

}  // namespace tokens
