#pragma once

#include <string>
#include <vector>

namespace tokens {

// Numerically computed eigenvalues grouped into clusters: values whose
// neighbors sit within tol are merged (single linkage) and represented by
// the cluster mean.
struct EigCluster {
    double value = 0.0;
    int multiplicity = 0;
};

struct EigMultiset {
    std::vector<EigCluster> clusters;  // ascending by value

    int total() const;
    std::vector<double> expanded() const;  // each value repeated
    std::string to_string(int precision = 6) const;
};

EigMultiset cluster_eigenvalues(std::vector<double> values, double tol);

// Multiset comparisons on sorted expansions; a and b need not be sorted.
bool multiset_equal(std::vector<double> a, std::vector<double> b, double tol);
bool multiset_contains(std::vector<double> outer, std::vector<double> inner, double tol);

struct MultisetDiff {
    bool contained = false;           // inner fit inside outer entirely
    std::vector<double> remainder;    // outer minus matched inner values
    std::vector<double> unmatched;    // inner values with no partner
};

// Greedy two-pointer difference of sorted multisets at tolerance tol.
MultisetDiff multiset_difference(std::vector<double> outer, std::vector<double> inner,
                                 double tol);

}  // namespace tokens
