#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tokens/families.hpp"
#include "tokens/graph.hpp"
#include "tokens/theory.hpp"
#include "tokens/token_graph.hpp"

namespace tokens {

// Reduces a token level to its mirror image below the middle: levels k and
// n-k have identical token graphs up to relabeling, so only min(k, n-k)
// needs computing. Requires 1 <= k <= n-1.
int reduce_k(int n, int k);

struct SweepConfig {
    enum class Source {
        exhaustive,  // all labeled graphs on n vertices (n <= 7)
        trees,       // all labeled trees on n vertices
        sampled,     // seeded random graphs on n vertices
        families,    // named families over a range of orders
        file,        // graph6 lines from input_path
    };

    Source source = Source::exhaustive;
    int n = 0;                       // exhaustive / trees / sampled
    int n_min = 0, n_max = 0;        // families
    std::vector<FamilyKind> kinds;   // families; complete_multipartite expands
                                     // to every two-part split of each order
    std::string input_path;          // file
    std::uint64_t sample_count = 0;  // sampled
    std::uint64_t seed = 1;          // sampled

    int k_min = 1;
    int k_max = 0;        // 0 means every level 1..n-1 (before reduction)
    bool reduce = true;   // fold levels past the middle onto their mirrors
    double tol = 1e-8;    // equality tolerance for the verdicts
    int jobs = 1;
    std::uint64_t guard = kDefaultVertexGuard;

    std::string out_path;  // empty: rows to the stream passed to sweep()
    bool json_output = false;
    std::uint64_t checkpoint_every = 10000;  // graphs per checkpoint block
    bool resume = false;
};

struct SweepSummary {
    std::uint64_t graphs = 0;
    std::uint64_t rows = 0;
    std::uint64_t holds = 0;
    std::uint64_t violations = 0;
    std::uint64_t hypothesis_unmet = 0;  // rows whose source graph is disconnected
    std::uint64_t guard_skipped = 0;
    double min_gap = 0.0;      // most negative observed alpha(G) - alpha(F_k(G))
    double max_abs_gap = 0.0;
    double runtime_seconds = 0.0;  // console-only; never serialized
};

struct SweepReport {
    SweepSummary summary;
    std::vector<ConjectureVerdict> failures;  // capped; see failures_truncated
    bool failures_truncated = false;
};

// Runs the conjecture check over the configured corpus and writes one row
// per (graph, level). With out_path set, rows go to that file and progress
// is checkpointed next to it (out_path + ".ckpt") every checkpoint_every
// graphs, so an interrupted sweep can --resume; otherwise rows go to `rows`.
SweepReport sweep(const SweepConfig& config, std::ostream& rows);

std::uint64_t sweep_corpus_size(const SweepConfig& config);

}  // namespace tokens
