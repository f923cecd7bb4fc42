#pragma once

#include <cstdint>
#include <vector>

namespace tokens {

// Exact binomial coefficient; throws on overflow of uint64.
std::uint64_t binom(int n, int k);

// Ranks k-subsets of {1..n} in colexicographic order: S < T iff the largest
// element where they differ is smaller in S. Rank of {s_1 < ... < s_k} is
// sum_i binom(s_i - 1, i). Colex has the property we lean on throughout:
// the k-subsets of {1..n-1} are exactly the first binom(n-1,k) ranks.
class SubsetIndex {
public:
    SubsetIndex(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t size() const { return size_; }

    std::uint64_t rank(const std::vector<int>& subset) const;
    std::vector<int> unrank(std::uint64_t r) const;

private:
    int n_;
    int k_;
    std::uint64_t size_;
};

}  // namespace tokens
