#include "tokens/multiset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tokens {

int EigMultiset::total() const {
    int t = 0;
    for (const auto& c : clusters) t += c.multiplicity;
    return t;
}

std::vector<double> EigMultiset::expanded() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(total()));
    for (const auto& c : clusters)
        out.insert(out.end(), static_cast<std::size_t>(c.multiplicity), c.value);
    return out;
}

std::string EigMultiset::to_string(int precision) const {
    std::ostringstream os;
    os.precision(precision);
    os << "{";
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (i) os << ", ";
        os << clusters[i].value;
        if (clusters[i].multiplicity > 1) os << "^" << clusters[i].multiplicity;
    }
    os << "}";
    return os.str();
}

EigMultiset cluster_eigenvalues(std::vector<double> values, double tol) {
    std::sort(values.begin(), values.end());
    EigMultiset ms;
    std::size_t i = 0;
    while (i < values.size()) {
        // Single linkage: extend while consecutive gaps stay within tol.
        std::size_t j = i + 1;
        double sum = values[i];
        while (j < values.size() && values[j] - values[j - 1] <= tol) {
            sum += values[j];
            ++j;
        }
        ms.clusters.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
        i = j;
    }
    return ms;
}

MultisetDiff multiset_difference(std::vector<double> outer, std::vector<double> inner,
                                 double tol) {
    std::sort(outer.begin(), outer.end());
    std::sort(inner.begin(), inner.end());
    MultisetDiff d;
    std::size_t oi = 0;
    for (std::size_t ii = 0; ii < inner.size(); ++ii) {
        // Skip outer values strictly below the match window.
        while (oi < outer.size() && outer[oi] < inner[ii] - tol) {
            d.remainder.push_back(outer[oi]);
            ++oi;
        }
        if (oi < outer.size() && std::abs(outer[oi] - inner[ii]) <= tol) {
            ++oi;  // matched; consume
        } else {
            d.unmatched.push_back(inner[ii]);
        }
    }
    for (; oi < outer.size(); ++oi) d.remainder.push_back(outer[oi]);
    d.contained = d.unmatched.empty();
    return d;
}

bool multiset_equal(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

bool multiset_contains(std::vector<double> outer, std::vector<double> inner, double tol) {
    return multiset_difference(std::move(outer), std::move(inner), tol).contained;
}

}  // namespace tokens
