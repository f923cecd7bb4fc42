#include "tokens/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tokens/enumerate.hpp"
#include "tokens/errors.hpp"
#include "tokens/graph6.hpp"
#include "tokens/serialize.hpp"
#include "tokens/spectral.hpp"

namespace tokens {

namespace {

constexpr std::size_t kMaxStoredFailures = 1000;

// FNV-1a over the config fields that determine row content; a resume against
// a checkpoint written under any other configuration must be refused.
std::uint64_t fingerprint(const SweepConfig& c, std::uint64_t corpus_size) {
    std::ostringstream os;
    os << static_cast<int>(c.source) << '|' << c.n << '|' << c.n_min << '|' << c.n_max << '|';
    for (auto kind : c.kinds) os << to_string(kind) << ',';
    os << '|' << c.input_path << '|' << c.sample_count << '|' << c.seed << '|' << c.k_min
       << '|' << c.k_max << '|' << c.reduce << '|' << c.tol << '|' << c.guard << '|'
       << c.json_output << '|' << corpus_size;
    std::uint64_t h = 1469598103934665603ull;
    for (char ch : os.str()) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    return h;
}

class Corpus {
public:
    static Corpus build(const SweepConfig& c) {
        Corpus corpus;
        corpus.config_ = &c;
        switch (c.source) {
            case SweepConfig::Source::exhaustive:
                corpus.size_ = labeled_graph_count(c.n);
                break;
            case SweepConfig::Source::trees:
                corpus.size_ = labeled_tree_count(c.n);
                break;
            case SweepConfig::Source::sampled:
                if (c.sample_count == 0)
                    throw std::invalid_argument("sweep: sampled corpus needs sample_count > 0");
                corpus.size_ = c.sample_count;
                break;
            case SweepConfig::Source::file:
                corpus.lines_ = read_graph6_lines(c.input_path);
                corpus.size_ = corpus.lines_.size();
                break;
            case SweepConfig::Source::families: {
                if (c.kinds.empty())
                    throw std::invalid_argument("sweep: family corpus needs at least one kind");
                if (c.n_min < 1 || c.n_max < c.n_min)
                    throw std::invalid_argument("sweep: family corpus needs 1 <= n_min <= n_max");
                for (auto kind : c.kinds) {
                    for (int n = c.n_min; n <= c.n_max; ++n) {
                        if (kind == FamilyKind::complete_multipartite) {
                            // Every bipartition n1 <= n2 of n.
                            for (int n1 = 1; 2 * n1 <= n; ++n1) {
                                FamilySpec spec;
                                spec.kind = kind;
                                spec.parts = {n1, n - n1};
                                corpus.specs_.push_back(spec);
                            }
                        } else {
                            FamilySpec spec;
                            spec.kind = kind;
                            spec.n = n;
                            try {
                                build_family(spec);  // probe validity of this order
                            } catch (const std::invalid_argument&) {
                                continue;  // e.g. wheel below 4, odd cocktail party
                            }
                            corpus.specs_.push_back(spec);
                        }
                    }
                }
                corpus.size_ = corpus.specs_.size();
                break;
            }
        }
        return corpus;
    }

    std::uint64_t size() const { return size_; }

    Graph get(std::uint64_t i) const {
        switch (config_->source) {
            case SweepConfig::Source::exhaustive:
                return labeled_graph(config_->n, i);
            case SweepConfig::Source::trees:
                return labeled_tree(config_->n, i);
            case SweepConfig::Source::sampled:
                return sample_graph(config_->n, config_->seed + i);
            case SweepConfig::Source::file:
                return parse_graph6(lines_[i]);
            case SweepConfig::Source::families:
                return build_family(specs_[i]);
        }
        throw std::logic_error("sweep: bad corpus source");
    }

private:
    const SweepConfig* config_ = nullptr;
    std::uint64_t size_ = 0;
    std::vector<std::string> lines_;
    std::vector<FamilySpec> specs_;
};

std::vector<int> levels_for(const SweepConfig& c, int n) {
    std::vector<int> out;
    if (n < 2) return out;
    const int hi = c.k_max == 0 ? n - 1 : std::min(c.k_max, n - 1);
    for (int k = std::max(c.k_min, 1); k <= hi; ++k)
        out.push_back(c.reduce ? reduce_k(n, k) : k);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct Row {
    ConjectureVerdict verdict;
    double wall_ms = 0.0;
    bool guard_skipped = false;
    bool disconnected = false;
    int k = 0;
};

struct Checkpoint {
    std::uint64_t fp = 0;
    std::uint64_t next_index = 0;
    std::uint64_t bytes = 0;
    SweepSummary summary;
};

void save_checkpoint(const std::string& path, const Checkpoint& ck) {
    json j{{"fingerprint", ck.fp},
           {"next_index", ck.next_index},
           {"bytes", ck.bytes},
           {"graphs", ck.summary.graphs},
           {"rows", ck.summary.rows},
           {"holds", ck.summary.holds},
           {"violations", ck.summary.violations},
           {"hypothesis_unmet", ck.summary.hypothesis_unmet},
           {"guard_skipped", ck.summary.guard_skipped},
           {"min_gap", ck.summary.min_gap},
           {"max_abs_gap", ck.summary.max_abs_gap}};
    // Write-then-rename so a crash mid-write cannot corrupt the checkpoint.
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("sweep: cannot write checkpoint " + tmp);
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("sweep: cannot read checkpoint " + path);
    json j;
    in >> j;
    Checkpoint ck;
    ck.fp = j.at("fingerprint").get<std::uint64_t>();
    ck.next_index = j.at("next_index").get<std::uint64_t>();
    ck.bytes = j.at("bytes").get<std::uint64_t>();
    ck.summary.graphs = j.at("graphs").get<std::uint64_t>();
    ck.summary.rows = j.at("rows").get<std::uint64_t>();
    ck.summary.holds = j.at("holds").get<std::uint64_t>();
    ck.summary.violations = j.at("violations").get<std::uint64_t>();
    ck.summary.hypothesis_unmet = j.at("hypothesis_unmet").get<std::uint64_t>();
    ck.summary.guard_skipped = j.at("guard_skipped").get<std::uint64_t>();
    ck.summary.min_gap = j.at("min_gap").get<double>();
    ck.summary.max_abs_gap = j.at("max_abs_gap").get<double>();
    return ck;
}

}  // namespace

int reduce_k(int n, int k) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("reduce_k: need 1 <= k <= n-1");
    return std::min(k, n - k);
}

std::uint64_t sweep_corpus_size(const SweepConfig& config) {
    return Corpus::build(config).size();
}

SweepReport sweep(const SweepConfig& config, std::ostream& row_stream) {
    const auto t0 = std::chrono::steady_clock::now();
    if (config.k_min < 1) throw std::invalid_argument("sweep: k_min must be >= 1");
    const Corpus corpus = Corpus::build(config);
    const std::uint64_t fp = fingerprint(config, corpus.size());

    const bool to_file = !config.out_path.empty();
    if (config.resume && !to_file)
        throw std::invalid_argument("sweep: --resume requires an output file");

    std::uint64_t start_index = 0;
    SweepReport report;
    std::ofstream file;
    std::ostream* out = &row_stream;

    if (to_file) {
        const std::string ckpt_path = config.out_path + ".ckpt";
        if (config.resume) {
            Checkpoint ck = load_checkpoint(ckpt_path);
            if (ck.fp != fp)
                throw std::invalid_argument(
                    "sweep: checkpoint was written by a different configuration");
            std::filesystem::resize_file(config.out_path, ck.bytes);
            start_index = ck.next_index;
            report.summary = ck.summary;
            file.open(config.out_path, std::ios::in | std::ios::out | std::ios::ate);
        } else {
            file.open(config.out_path, std::ios::trunc);
        }
        if (!file) throw std::runtime_error("sweep: cannot open " + config.out_path);
        out = &file;
    }

    auto emit_prefix = [&] {
        if (config.json_output)
            *out << "{\"rows\":[";
        else
            *out << csv_header() << '\n';
    };
    if (start_index == 0) emit_prefix();

    const int jobs = std::max(config.jobs, 1);
    std::mutex failure_mutex;
    std::exception_ptr first_error;

    for (std::uint64_t block_start = start_index; block_start < corpus.size();) {
        const std::uint64_t block_end =
            std::min(corpus.size(), block_start + std::max<std::uint64_t>(
                                                      config.checkpoint_every, 1));
        const std::size_t block_size = static_cast<std::size_t>(block_end - block_start);
        std::vector<std::vector<Row>> results(block_size);

        std::atomic<std::uint64_t> cursor{block_start};
        auto work = [&] {
            for (;;) {
                const std::uint64_t i = cursor.fetch_add(1);
                if (i >= block_end) return;
                try {
                    const Graph g = corpus.get(i);
                    const bool disconnected = !g.is_connected();
                    std::vector<Row> rows;
                    for (int k : levels_for(config, g.vertex_count())) {
                        Row row;
                        row.k = k;
                        row.disconnected = disconnected;
                        const auto s = std::chrono::steady_clock::now();
                        try {
                            row.verdict = check_conjecture(g, k, config.tol, config.guard);
                        } catch (const GuardExceeded&) {
                            row.guard_skipped = true;
                            row.verdict.graph6 = emit_graph6(g);
                            row.verdict.n = g.vertex_count();
                            row.verdict.k = k;
                        }
                        row.wall_ms = std::chrono::duration<double, std::milli>(
                                          std::chrono::steady_clock::now() - s)
                                          .count();
                        rows.push_back(std::move(row));
                    }
                    results[static_cast<std::size_t>(i - block_start)] = std::move(rows);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };

        if (jobs == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
        if (first_error) std::rethrow_exception(first_error);

        // Rows come out strictly in corpus order regardless of worker timing.
        for (std::size_t i = 0; i < block_size; ++i) {
            ++report.summary.graphs;
            for (const Row& row : results[i]) {
                if (row.guard_skipped) {
                    ++report.summary.guard_skipped;
                    continue;
                }
                if (config.json_output) {
                    json j = row.verdict;
                    j["wall_ms"] = row.wall_ms;
                    *out << (report.summary.rows == 0 ? "" : ",") << '\n' << j.dump();
                } else {
                    *out << csv_row(row.verdict, row.wall_ms) << '\n';
                }
                ++report.summary.rows;
                if (row.disconnected) ++report.summary.hypothesis_unmet;
                report.summary.min_gap =
                    report.summary.rows == 1
                        ? row.verdict.gap
                        : std::min(report.summary.min_gap, row.verdict.gap);
                report.summary.max_abs_gap =
                    std::max(report.summary.max_abs_gap, std::abs(row.verdict.gap));
                if (row.verdict.holds) {
                    ++report.summary.holds;
                } else {
                    ++report.summary.violations;
                    if (report.failures.size() < kMaxStoredFailures)
                        report.failures.push_back(row.verdict);
                    else
                        report.failures_truncated = true;
                }
            }
        }
        out->flush();
        block_start = block_end;

        if (to_file && block_start < corpus.size()) {
            Checkpoint ck;
            ck.fp = fp;
            ck.next_index = block_start;
            ck.bytes = static_cast<std::uint64_t>(file.tellp());
            ck.summary = report.summary;
            save_checkpoint(config.out_path + ".ckpt", ck);
        }
    }

    if (config.json_output) {
        json summary{{"graphs", report.summary.graphs},
                     {"rows", report.summary.rows},
                     {"holds", report.summary.holds},
                     {"violations", report.summary.violations},
                     {"hypothesis_unmet", report.summary.hypothesis_unmet},
                     {"guard_skipped", report.summary.guard_skipped},
                     {"min_gap", report.summary.min_gap},
                     {"max_abs_gap", report.summary.max_abs_gap}};
        *out << "\n],\"summary\":" << summary.dump() << "}\n";
    }
    out->flush();
    if (to_file) std::filesystem::remove(config.out_path + ".ckpt");

    report.summary.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace tokens
