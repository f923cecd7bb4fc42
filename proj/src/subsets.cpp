#include "tokens/subsets.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace tokens {

std::uint64_t binom(int n, int k) {
    if (k < 0 || n < 0) throw std::invalid_argument("binom: negative argument");
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) / i is exact at every step; guard the multiply.
        const std::uint64_t f = static_cast<std::uint64_t>(n - k + i);
        if (r > std::numeric_limits<std::uint64_t>::max() / f)
            throw std::overflow_error("binom: result does not fit in 64 bits");
        r = r * f / static_cast<std::uint64_t>(i);
    }
    return r;
}

SubsetIndex::SubsetIndex(int n, int k) : n_(n), k_(k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("SubsetIndex: need 0 <= k <= n");
    size_ = binom(n, k);
}

std::uint64_t SubsetIndex::rank(const std::vector<int>& subset) const {
    if (static_cast<int>(subset.size()) != k_)
        throw std::invalid_argument("rank: subset has wrong size");
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    std::uint64_t r = 0;
    for (int i = 0; i < k_; ++i) {
        if (s[i] < 1 || s[i] > n_ || (i > 0 && s[i] == s[i - 1]))
            throw std::invalid_argument("rank: subset must have distinct elements in 1..n");
        r += binom(s[i] - 1, i + 1);
    }
    return r;
}

std::vector<int> SubsetIndex::unrank(std::uint64_t r) const {
    if (r >= size_) throw std::invalid_argument("unrank: rank out of range");
    std::vector<int> s(static_cast<std::size_t>(k_));
    // Peel off the largest element first: it is the largest c with
    // binom(c-1, k) <= remaining rank.
    int c = n_;
    for (int i = k_; i >= 1; --i) {
        while (binom(c - 1, i) > r) --c;
        s[static_cast<std::size_t>(i - 1)] = c;
        r -= binom(c - 1, i);
        --c;
    }
    return s;
}

}  // namespace tokens
