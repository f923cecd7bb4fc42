#include "tokens/token_graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "tokens/errors.hpp"

namespace tokens {

namespace {

std::vector<std::vector<int>> all_subsets(int n, int k) {
    SubsetIndex idx(n, k);
    std::vector<std::vector<int>> labels;
    labels.reserve(idx.size());
    for (std::uint64_t r = 0; r < idx.size(); ++r) labels.push_back(idx.unrank(r));
    return labels;
}

}  // namespace

const std::vector<int>& TokenGraph::label(int vertex) const {
    if (vertex < 1 || vertex > static_cast<int>(labels_.size()))
        throw std::invalid_argument("TokenGraph::label: vertex out of range");
    return labels_[static_cast<std::size_t>(vertex - 1)];
}

TokenGraph token_graph(const Graph& g, int k, std::uint64_t guard) {
    const int n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("token_graph: need 1 <= k <= n");
    std::uint64_t count = 0;
    try {
        count = binom(n, k);
    } catch (const std::overflow_error&) {
        throw GuardExceeded("token_graph: binom(" + std::to_string(n) + "," +
                            std::to_string(k) + ") does not even fit in 64 bits");
    }
    if (count > guard)
        throw GuardExceeded("token_graph: binom(" + std::to_string(n) + "," + std::to_string(k) +
                            ") = " + std::to_string(count) + " exceeds guard " +
                            std::to_string(guard));
    if (count > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
        throw std::invalid_argument("token_graph: too many vertices");

    TokenGraph t;
    t.source_n = n;
    t.k = k;
    t.labels_ = all_subsets(n, k);
    t.graph = Graph(static_cast<int>(count));

    SubsetIndex idx(n, k);
    std::vector<int> other;
    other.reserve(static_cast<std::size_t>(k));
    for (std::uint64_t r = 0; r < count; ++r) {
        const auto& s = t.labels_[r];
        for (int a : s) {
            for (int b : g.neighbors(a)) {
                if (std::binary_search(s.begin(), s.end(), b)) continue;
                // Slide the token on a to b; count each edge from one side.
                other.assign(s.begin(), s.end());
                *std::find(other.begin(), other.end(), a) = b;
                const std::uint64_t q = idx.rank(other);
                if (r < q) t.graph.add_edge(static_cast<int>(r) + 1, static_cast<int>(q) + 1);
            }
        }
    }
    return t;
}

BinomialMatrix::BinomialMatrix(int n, int k) : n_(n), k_(k) {
    if (k < 0 || k > n) throw std::invalid_argument("BinomialMatrix: need 0 <= k <= n");
    labels_ = all_subsets(n, k);
}

double BinomialMatrix::entry(std::uint64_t row, int col) const {
    if (row >= rows() || col < 0 || col >= n_)
        throw std::invalid_argument("BinomialMatrix::entry: index out of range");
    const auto& s = labels_[row];
    return std::binary_search(s.begin(), s.end(), col + 1) ? 1.0 : 0.0;
}

std::vector<double> BinomialMatrix::apply(const std::vector<double>& v) const {
    if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("BinomialMatrix::apply: length mismatch");
    std::vector<double> out(labels_.size(), 0.0);
    for (std::size_t r = 0; r < labels_.size(); ++r) {
        double s = 0.0;
        for (int e : labels_[r]) s += v[static_cast<std::size_t>(e - 1)];
        out[r] = s;
    }
    return out;
}

std::vector<double> BinomialMatrix::apply_transpose(const std::vector<double>& u) const {
    if (u.size() != labels_.size())
        throw std::invalid_argument("BinomialMatrix::apply_transpose: length mismatch");
    std::vector<double> out(static_cast<std::size_t>(n_), 0.0);
    for (std::size_t r = 0; r < labels_.size(); ++r)
        for (int e : labels_[r]) out[static_cast<std::size_t>(e - 1)] += u[r];
    return out;
}

Matrix BinomialMatrix::dense() const {
    Matrix m(labels_.size(), static_cast<std::size_t>(n_), 0.0);
    for (std::size_t r = 0; r < labels_.size(); ++r)
        for (int e : labels_[r]) m(r, static_cast<std::size_t>(e - 1)) = 1.0;
    return m;
}

TokenRestriction restrict_by_element(const TokenGraph& t, int a) {
    const int n = t.source_n;
    const int k = t.k;
    if (a < 1 || a > n) throw std::invalid_argument("restrict_by_element: vertex out of range");
    if (k < 1 || k > n) throw std::invalid_argument("restrict_by_element: malformed token graph");

    // Relabel {1..n} minus a down to {1..n-1}, then rank the trimmed subsets
    // in the smaller index. Colex makes both maps bijections onto a prefix.
    auto trim = [a](const std::vector<int>& s, bool drop_a) {
        std::vector<int> out;
        out.reserve(s.size());
        for (int e : s) {
            if (e == a) {
                if (!drop_a) out.push_back(e);  // unreachable by construction
                continue;
            }
            out.push_back(e < a ? e : e - 1);
        }
        return out;
    };

    const std::uint64_t total = static_cast<std::uint64_t>(t.labels().size());
    const std::uint64_t with_count = binom(n - 1, k - 1);
    const std::uint64_t without_count = binom(n - 1, k);

    TokenRestriction res;
    res.with_vertices.assign(static_cast<std::size_t>(with_count), 0);
    res.without_vertices.assign(static_cast<std::size_t>(without_count), 0);
    // Original token vertex -> (side, 1-based position on that side).
    std::vector<int> side_pos(static_cast<std::size_t>(total), 0);
    std::vector<char> has_a(static_cast<std::size_t>(total), 0);

    SubsetIndex with_idx(n - 1, k - 1);
    SubsetIndex without_idx(n - 1, k);
    for (std::uint64_t r = 0; r < total; ++r) {
        const auto& s = t.labels()[r];
        const bool contains = std::binary_search(s.begin(), s.end(), a);
        has_a[r] = contains ? 1 : 0;
        if (contains) {
            const std::uint64_t p = with_idx.rank(trim(s, true));
            side_pos[r] = static_cast<int>(p) + 1;
            res.with_vertices[p] = static_cast<int>(r) + 1;
        } else {
            const std::uint64_t p = without_idx.rank(trim(s, false));
            side_pos[r] = static_cast<int>(p) + 1;
            res.without_vertices[p] = static_cast<int>(r) + 1;
        }
    }

    res.with_element = Graph(static_cast<int>(with_count));
    res.without_element = Graph(static_cast<int>(without_count));
    for (auto [u, v] : t.graph.edges()) {
        const std::size_t iu = static_cast<std::size_t>(u - 1);
        const std::size_t iv = static_cast<std::size_t>(v - 1);
        if (has_a[iu] != has_a[iv]) continue;
        if (has_a[iu])
            res.with_element.add_edge(side_pos[iu], side_pos[iv]);
        else
            res.without_element.add_edge(side_pos[iu], side_pos[iv]);
    }
    return res;
}

}  // namespace tokens
