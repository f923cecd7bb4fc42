#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tokens/graph.hpp"
#include "tokens/matrix.hpp"
#include "tokens/multiset.hpp"
#include "tokens/spectral.hpp"
#include "tokens/token_graph.hpp"

namespace tokens {

// Closed-form Laplacian spectrum of the Johnson graph J(n,k): level j in
// 0..min(k,n-k) contributes eigenvalue j(n+1-j) with multiplicity
// binom(n,j) - binom(n,j-1). Requires 1 <= k <= n-1.
EigMultiset johnson_spectrum(int n, int k);

// ---------------------------------------------------------------------------

struct ContainmentReport {
    int n = 0, k = 0;
    std::vector<double> source_spectrum;    // of the source graph itself
    std::vector<double> previous_spectrum;  // token level k-1 (level 1 when k == 1)
    std::vector<double> token_spectrum;     // token level k
    bool source_contained = false;
    bool chain_checked = false;  // counting makes the k-1 chain meaningless past n/2
    bool chain_contained = false;
    std::vector<double> new_values;  // token level k minus level k-1
    double tol = 0.0;

    bool ok() const { return source_contained && (!chain_checked || chain_contained); }
};

// Verifies that the source spectrum embeds in the token spectrum, and that
// consecutive token levels nest; reports the fresh eigenvalues of level k.
ContainmentReport check_containment(const Graph& g, int k,
                                    double tol_base = kSpectraTolBase,
                                    std::uint64_t guard = kDefaultVertexGuard);

// ---------------------------------------------------------------------------

// Certifies that the token spectra of a graph and its complement pair up:
// sorted into levels, each pair sums to the matching Johnson eigenvalue.
// Built by restricting the token Laplacian of g to the eigenspaces of the
// Johnson Laplacian; if one of those spaces fails to be invariant the whole
// computation aborts with InvarianceError rather than certify nonsense.
struct PairingCertificate {
    struct Entry {
        double value = 0.0;             // eigenvalue of the token graph of g
        double complement_value = 0.0;  // partner eigenvalue for the complement
        int level = 0;
        double johnson_value = 0.0;     // what the pair sums to
        double residual = 0.0;          // |value + complement_value - johnson_value|
    };

    int n = 0, k = 0;
    std::vector<Entry> entries;  // sorted by (level, value)
    std::vector<int> level_counts;
    double max_residual = 0.0;
    double max_invariance_ratio = 0.0;
    double tol = 0.0;  // residual bound the entries were validated against
};

PairingCertificate check_pairing(const Graph& g, int k,
                                 double tol_base = kSpectraTolBase,
                                 std::uint64_t guard = kDefaultVertexGuard);

// ---------------------------------------------------------------------------

// Splits the paired spectra by level and cross-checks each level's values
// against the difference of consecutive token-level spectra, for both the
// graph and its complement. Level sums are inherited from the certificate.
struct LevelPartition {
    enum class Status { pass, mismatch, hypothesis_unmet };

    struct Level {
        int level = 0;
        double johnson_value = 0.0;
        std::vector<PairingCertificate::Entry> pairs;
        std::vector<double> fresh_values;             // diff of token levels, g side
        std::vector<double> fresh_complement_values;  // same for the complement
        bool cross_check_ok = false;
    };

    int n = 0, k = 0;
    Status status = Status::pass;
    std::vector<Level> levels;  // 0..k
    // Worst ||B^T u|| / ||u|| over level >= 2 eigenvectors; the paired levels
    // above the source level live in the kernel of the projection.
    double max_projection_ratio = 0.0;
    double tol = 0.0;
    std::string detail;  // human-readable mismatch description, empty if clean
};

// Requires both g and its complement connected for a `pass` (else the result
// is marked hypothesis_unmet) and k <= n/2.
LevelPartition level_partition(const Graph& g, int k,
                               double tol_base = kSpectraTolBase,
                               std::uint64_t guard = kDefaultVertexGuard);

// ---------------------------------------------------------------------------

// Does the algebraic connectivity survive the climb to token level k?
struct ConjectureVerdict {
    std::string graph6;
    int n = 0, k = 0;
    double alpha_source = 0.0;
    double alpha_token = 0.0;
    double gap = 0.0;  // alpha_source - alpha_token
    bool holds = false;
    bool transfer_applicable = false;
};

ConjectureVerdict check_conjecture(const Graph& g, int k, double tol = 1e-8,
                                   std::uint64_t guard = kDefaultVertexGuard);

// Max-degree threshold above which a level k-1 connectivity bound transfers
// to level k: k(n+k-3)/(2k-1).
double transfer_threshold(int k, int n);
bool transfer_applies(const Graph& g, int k);

// ---------------------------------------------------------------------------

struct DegreeBoundsReport {
    struct Side {
        int max_degree = 0;
        double lambda_max = 0.0;
        bool has_edges = false;
        bool lower_ok = false;  // 1 + max_degree <= lambda_max (needs an edge)
        bool upper_ok = false;  // lambda_max <= 2 * max_degree
    };

    int n = 0, k = 0;
    Side source;
    Side token;
    int degree_cap = 0;           // k * max_degree(source)
    bool degree_cap_ok = false;   // max_degree(token) <= degree_cap
    double tol = 0.0;

    bool ok() const {
        auto side_ok = [](const Side& s) { return !s.has_edges || (s.lower_ok && s.upper_ok); };
        return degree_cap_ok && side_ok(source) && side_ok(token);
    }
};

DegreeBoundsReport check_degree_bounds(const Graph& g, int k,
                                       double tol_base = kSpectraTolBase,
                                       std::uint64_t guard = kDefaultVertexGuard);

// ---------------------------------------------------------------------------

struct CollapseReport {
    double alpha_base = 0.0;
    double alpha_collapsed = 0.0;
    bool non_decreasing = false;
};

// Collapsing an edge of a tree (with >= 3 vertices) must not lower the
// algebraic connectivity.
CollapseReport check_collapse_monotonicity(const Graph& tree, int u, int v,
                                           double tol = 1e-8);

// ---------------------------------------------------------------------------

struct FindResult {
    Graph graph;
    std::string graph6;
    std::uint64_t index = 0;  // position in the labeled enumeration
};

// Exhaustive search (n <= 7) for a labeled graph whose Laplacian spectrum
// and complement spectrum both match the targets; throws NoMatchError if the
// enumeration finishes empty-handed.
FindResult find_graph_by_spectra(int n, const std::vector<double>& spectrum,
                                 const std::vector<double>& complement_spectrum,
                                 double tol = 1e-6);

// Token-graph eigenpairs whose projection to the source space vanishes,
// grouped from eigenvalue clusters; these are the vectors the higher levels
// of the partition are made of.
std::vector<std::pair<double, std::vector<double>>> token_kernel_eigenpairs(
    const Graph& g, int k, double tol_base = kSpectraTolBase,
    std::uint64_t guard = kDefaultVertexGuard);

}  // namespace tokens
