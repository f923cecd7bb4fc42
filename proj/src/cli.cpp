#include "tokens/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tokens/enumerate.hpp"
#include "tokens/errors.hpp"
#include "tokens/families.hpp"
#include "tokens/graph6.hpp"
#include "tokens/serialize.hpp"
#include "tokens/spectral.hpp"
#include "tokens/sweep.hpp"
#include "tokens/theory.hpp"
#include "tokens/token_graph.hpp"

namespace tokens {

namespace {

// One way to say which graph a subcommand works on: a named family, a
// graph6 literal, or a line of a graph6 file.
struct GraphInput {
    std::string family;
    int n = 0;
    std::vector<int> parts;
    std::string graph6;
    std::string input_path;
    std::uint64_t index = 0;

    Graph resolve() const {
        const int sources =
            (family.empty() ? 0 : 1) + (graph6.empty() ? 0 : 1) + (input_path.empty() ? 0 : 1);
        if (sources != 1)
            throw std::invalid_argument(
                "exactly one of --family, --graph6, --input must be given");
        if (!family.empty()) {
            FamilySpec spec;
            spec.kind = family_kind_from_string(family);
            if (spec.kind == FamilyKind::complete_multipartite) {
                if (parts.empty())
                    throw std::invalid_argument("complete_multipartite needs --parts");
                spec.parts = parts;
            } else {
                if (n < 1) throw std::invalid_argument("--family needs --n");
                spec.n = n;
            }
            return build_family(spec);
        }
        if (!graph6.empty()) return parse_graph6(graph6);
        const auto lines = read_graph6_lines(input_path);
        if (index >= lines.size())
            throw std::invalid_argument("--index past the end of " + input_path);
        return parse_graph6(lines[index]);
    }
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("--family", in.family, "named family (see `families`)");
    cmd->add_option("--n", in.n, "order for --family");
    cmd->add_option("--parts", in.parts, "part sizes for complete_multipartite")
        ->delimiter(',');
    cmd->add_option("--graph6", in.graph6, "graph6 literal");
    cmd->add_option("--input", in.input_path, "graph6 file, one graph per line");
    cmd->add_option("--index", in.index, "line to take from --input (0-based)")
        ->capture_default_str();
}

std::uint64_t guard_from_env() {
    if (const char* env = std::getenv("TOKEN_SPECTRA_GUARD")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw std::invalid_argument(
                "TOKEN_SPECTRA_GUARD must be a positive integer, got '" + std::string(env) +
                "'");
        return v;
    }
    return kDefaultVertexGuard;
}

std::vector<double> parse_value_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size())
            throw std::invalid_argument("bad number in list: '" + item + "'");
    }
    return out;
}

std::string render_pairing_table(const PairingCertificate& cert) {
    const std::size_t count = cert.entries.size();
    auto marker = [](int level) { return std::string(level >= 2 ? level - 1 : 0, '*'); };
    auto fmt = [&](double v, int level) { return format_double(v) + marker(level); };

    std::vector<std::size_t> cols(count), rows(count);
    for (std::size_t i = 0; i < count; ++i) cols[i] = rows[i] = i;
    std::stable_sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = cert.entries[a];
        const auto& y = cert.entries[b];
        return x.value != y.value ? x.value < y.value : x.level < y.level;
    });
    std::stable_sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = cert.entries[a];
        const auto& y = cert.entries[b];
        return x.complement_value != y.complement_value
                   ? x.complement_value < y.complement_value
                   : x.level < y.level;
    });
    std::vector<std::size_t> col_of(count), row_of(count);
    for (std::size_t i = 0; i < count; ++i) {
        col_of[cols[i]] = i;
        row_of[rows[i]] = i;
    }

    std::vector<std::vector<std::string>> grid(count + 1,
                                               std::vector<std::string>(count + 1));
    for (std::size_t i = 0; i < count; ++i) {
        const auto& e = cert.entries[i];
        grid[0][col_of[i] + 1] = fmt(e.value, e.level);
        grid[row_of[i] + 1][0] = fmt(e.complement_value, e.level);
        grid[row_of[i] + 1][col_of[i] + 1] = fmt(e.johnson_value, e.level);
    }

    std::vector<std::size_t> width(count + 1, 0);
    for (const auto& line : grid)
        for (std::size_t c = 0; c < line.size(); ++c)
            width[c] = std::max(width[c], line[c].size());

    std::ostringstream os;
    os << "pairing of token eigenvalues (columns: graph, rows: complement, "
          "cells: their sum; level j >= 2 marked with j-1 asterisks)\n";
    for (const auto& line : grid) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            os << std::string(width[c] - line[c].size(), ' ') << line[c];
            if (c + 1 < line.size()) os << "  ";
        }
        os << '\n';
    }
    return os.str();
}

void write_labels(const TokenGraph& t, std::ostream& os) {
    for (std::size_t r = 0; r < t.labels().size(); ++r) {
        os << r;
        for (int e : t.labels()[r]) os << ' ' << e;
        os << '\n';
    }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"token graph spectra toolkit"};
    app.require_subcommand(1);
    std::function<int()> action;

    const std::uint64_t env_guard = guard_from_env();

    // ---- families ------------------------------------------------------
    auto* cmd_families = app.add_subcommand("families", "list the named graph families");
    cmd_families->callback([&] {
        action = [&]() {
            for (const auto& name : family_names()) out << name << '\n';
            return 0;
        };
    });

    // ---- spectrum ------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("spectrum", "Laplacian spectrum of a graph");
        auto in = std::make_shared<GraphInput>();
        auto tol_base = std::make_shared<double>(kSpectraTolBase);
        add_graph_options(cmd, *in);
        cmd->add_option("--tol-base", *tol_base, "relative clustering tolerance")
            ->capture_default_str();
        cmd->callback([&, in, tol_base] {
            action = [&, in, tol_base]() {
                const Graph g = in->resolve();
                const auto values = laplacian_spectrum(g);
                const double tol = spectra_tol(values.back(), *tol_base);
                json j{{"graph6", emit_graph6(g)},
                       {"n", g.vertex_count()},
                       {"edges", g.edge_count()},
                       {"eigenvalues", values},
                       {"clusters", cluster_eigenvalues(values, tol)},
                       {"spectral_radius", values.back()}};
                if (g.vertex_count() >= 2) j["algebraic_connectivity"] = values[1];
                out << j.dump(2) << '\n';
                return 0;
            };
        });
    }

    // ---- token ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("token", "build the k-token graph");
        auto in = std::make_shared<GraphInput>();
        auto k = std::make_shared<int>(0);
        auto out_base = std::make_shared<std::string>();
        auto labels = std::make_shared<bool>(false);
        add_graph_options(cmd, *in);
        cmd->add_option("--k", *k, "number of tokens")->required();
        cmd->add_option("--out", *out_base, "write <out>.g6 and <out>.labels");
        cmd->add_flag("--labels", *labels, "also print the subset labels");
        cmd->callback([&, in, k, out_base, labels] {
            action = [&, in, k, out_base, labels]() {
                const TokenGraph t = token_graph(in->resolve(), *k, env_guard);
                const std::string g6 = emit_graph6(t.graph);
                if (out_base->empty()) {
                    out << g6 << '\n';
                    if (*labels) write_labels(t, out);
                } else {
                    std::ofstream g6_file(*out_base + ".g6");
                    std::ofstream label_file(*out_base + ".labels");
                    if (!g6_file || !label_file)
                        throw std::runtime_error("cannot write " + *out_base + ".{g6,labels}");
                    g6_file << g6 << '\n';
                    write_labels(t, label_file);
                    json j{{"graph6_file", *out_base + ".g6"},
                           {"labels_file", *out_base + ".labels"},
                           {"n", t.source_n},
                           {"k", t.k},
                           {"vertices", t.graph.vertex_count()},
                           {"edges", t.graph.edge_count()}};
                    out << j.dump(2) << '\n';
                }
                return 0;
            };
        });
    }

    // ---- check ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "check", "does algebraic connectivity survive at token level k");
        auto in = std::make_shared<GraphInput>();
        auto k = std::make_shared<int>(0);
        auto tol = std::make_shared<double>(1e-8);
        add_graph_options(cmd, *in);
        cmd->add_option("--k", *k, "number of tokens")->required();
        cmd->add_option("--tol", *tol, "equality tolerance")->capture_default_str();
        cmd->callback([&, in, k, tol] {
            action = [&, in, k, tol]() {
                const ConjectureVerdict v =
                    check_conjecture(in->resolve(), *k, *tol, env_guard);
                out << json(v).dump(2) << '\n';
                return v.holds ? 0 : 1;
            };
        });
    }

    // ---- pair ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "pair", "certify the graph/complement token spectrum pairing");
        auto in = std::make_shared<GraphInput>();
        auto k = std::make_shared<int>(0);
        auto table = std::make_shared<bool>(false);
        auto tol_base = std::make_shared<double>(kSpectraTolBase);
        add_graph_options(cmd, *in);
        cmd->add_option("--k", *k, "number of tokens")->required();
        cmd->add_flag("--table", *table, "render the pairing as a text grid");
        cmd->add_option("--tol-base", *tol_base, "relative tolerance")->capture_default_str();
        cmd->callback([&, in, k, table, tol_base] {
            action = [&, in, k, table, tol_base]() {
                const PairingCertificate cert =
                    check_pairing(in->resolve(), *k, *tol_base, env_guard);
                if (*table) {
                    if (cert.entries.size() > 40)
                        throw std::invalid_argument(
                            "--table is unreadable past 40 eigenvalues; use the JSON output");
                    out << render_pairing_table(cert);
                } else {
                    out << json(cert).dump(2) << '\n';
                }
                return 0;
            };
        });
    }

    // ---- partition -----------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "partition", "split the paired spectra by level and cross-check");
        auto in = std::make_shared<GraphInput>();
        auto k = std::make_shared<int>(0);
        auto tol_base = std::make_shared<double>(kSpectraTolBase);
        add_graph_options(cmd, *in);
        cmd->add_option("--k", *k, "number of tokens")->required();
        cmd->add_option("--tol-base", *tol_base, "relative tolerance")->capture_default_str();
        cmd->callback([&, in, k, tol_base] {
            action = [&, in, k, tol_base]() {
                const LevelPartition part =
                    level_partition(in->resolve(), *k, *tol_base, env_guard);
                out << json(part).dump(2) << '\n';
                return part.status == LevelPartition::Status::mismatch ? 1 : 0;
            };
        });
    }

    // ---- bounds --------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "bounds", "degree cap and spectral-radius bounds at level k");
        auto in = std::make_shared<GraphInput>();
        auto k = std::make_shared<int>(0);
        auto tol_base = std::make_shared<double>(kSpectraTolBase);
        add_graph_options(cmd, *in);
        cmd->add_option("--k", *k, "number of tokens")->required();
        cmd->add_option("--tol-base", *tol_base, "relative tolerance")->capture_default_str();
        cmd->callback([&, in, k, tol_base] {
            action = [&, in, k, tol_base]() {
                const DegreeBoundsReport rep =
                    check_degree_bounds(in->resolve(), *k, *tol_base, env_guard);
                out << json(rep).dump(2) << '\n';
                return rep.ok() ? 0 : 1;
            };
        });
    }

    // ---- sweep ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("sweep", "run the level check over a corpus");
        auto cfg = std::make_shared<SweepConfig>();
        auto source = std::make_shared<std::string>("exhaustive");
        auto kinds = std::make_shared<std::vector<std::string>>();
        auto format = std::make_shared<std::string>("csv");
        cfg->guard = env_guard;
        cmd->add_option("--source", *source,
                        "exhaustive | trees | sampled | families | file")
            ->capture_default_str();
        cmd->add_option("--n", cfg->n, "order for exhaustive/trees/sampled");
        cmd->add_option("--n-min", cfg->n_min, "smallest order for families");
        cmd->add_option("--n-max", cfg->n_max, "largest order for families");
        cmd->add_option("--families", *kinds, "family kinds to sweep")->delimiter(',');
        cmd->add_option("--input", cfg->input_path, "graph6 file for --source file");
        cmd->add_option("--count", cfg->sample_count, "graphs for --source sampled");
        cmd->add_option("--seed", cfg->seed, "base seed for --source sampled")
            ->capture_default_str();
        cmd->add_option("--k-min", cfg->k_min, "lowest token level")->capture_default_str();
        cmd->add_option("--k-max", cfg->k_max, "highest token level (0 = all)")
            ->capture_default_str();
        auto no_reduce = std::make_shared<bool>(false);
        cmd->add_flag("--no-reduce", *no_reduce, "do not fold levels past the middle");
        cmd->add_option("--tol", cfg->tol, "equality tolerance")->capture_default_str();
        cmd->add_option("--jobs", cfg->jobs, "worker threads")->capture_default_str();
        cmd->add_option("--guard", cfg->guard, "token vertex-count guard")
            ->capture_default_str();
        cmd->add_option("--out", cfg->out_path, "row file (enables checkpointing)");
        cmd->add_option("--format", *format, "csv | json")->capture_default_str();
        cmd->add_option("--checkpoint-every", cfg->checkpoint_every,
                        "graphs between checkpoints")
            ->capture_default_str();
        cmd->add_flag("--resume", cfg->resume, "continue from the checkpoint");
        auto exhaustive_n = std::make_shared<int>(0);
        auto trees_n = std::make_shared<int>(0);
        auto single_k = std::make_shared<int>(0);
        cmd->add_option("--exhaustive", *exhaustive_n,
                        "shorthand for --source exhaustive --n N");
        cmd->add_option("--trees", *trees_n, "shorthand for --source trees --n N");
        cmd->add_option("--k", *single_k, "shorthand for --k-min K --k-max K");
        cmd->callback([&, cfg, source, kinds, format, no_reduce, exhaustive_n, trees_n,
                       single_k] {
            action = [&, cfg, source, kinds, format, no_reduce, exhaustive_n, trees_n,
                      single_k]() {
                if (*exhaustive_n > 0) {
                    *source = "exhaustive";
                    cfg->n = *exhaustive_n;
                }
                if (*trees_n > 0) {
                    *source = "trees";
                    cfg->n = *trees_n;
                }
                if (*single_k > 0) cfg->k_min = cfg->k_max = *single_k;
                // --input implies the file source unless one was named.
                if (!cfg->input_path.empty() && *source == "exhaustive") *source = "file";
                if (*source == "exhaustive")
                    cfg->source = SweepConfig::Source::exhaustive;
                else if (*source == "trees")
                    cfg->source = SweepConfig::Source::trees;
                else if (*source == "sampled")
                    cfg->source = SweepConfig::Source::sampled;
                else if (*source == "families")
                    cfg->source = SweepConfig::Source::families;
                else if (*source == "file")
                    cfg->source = SweepConfig::Source::file;
                else
                    throw std::invalid_argument("unknown sweep source: " + *source);
                if (*format == "json")
                    cfg->json_output = true;
                else if (*format != "csv")
                    throw std::invalid_argument("unknown sweep format: " + *format);
                cfg->reduce = !*no_reduce;
                for (const auto& name : *kinds)
                    cfg->kinds.push_back(family_kind_from_string(name));

                const SweepReport report = sweep(*cfg, out);
                json j{{"graphs", report.summary.graphs},
                       {"rows", report.summary.rows},
                       {"holds", report.summary.holds},
                       {"violations", report.summary.violations},
                       {"hypothesis_unmet", report.summary.hypothesis_unmet},
                       {"guard_skipped", report.summary.guard_skipped},
                       {"min_gap", report.summary.min_gap},
                       {"max_abs_gap", report.summary.max_abs_gap},
                       {"runtime_seconds", report.summary.runtime_seconds}};
                if (!report.failures.empty()) {
                    json fails = json::array();
                    for (std::size_t i = 0; i < report.failures.size() && i < 20; ++i) {
                        json f = report.failures[i];
                        // graph6 never contains a single quote, so this is shell-safe.
                        f["reproduce"] = "tokenspectra check --graph6 '" +
                                         report.failures[i].graph6 +
                                         "' --k " + std::to_string(report.failures[i].k) +
                                         " --tol " + format_double(cfg->tol);
                        fails.push_back(std::move(f));
                    }
                    j["failures"] = fails;
                    j["failures_truncated"] =
                        report.failures_truncated || report.failures.size() > 20;
                }
                // Rows on stdout push the summary to stderr to keep them clean.
                (cfg->out_path.empty() ? err : out) << j.dump(2) << '\n';
                return report.summary.violations == 0 ? 0 : 1;
            };
        });
    }

    // ---- find ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "find", "search all labeled graphs for given graph+complement spectra");
        auto n = std::make_shared<int>(0);
        auto spec = std::make_shared<std::string>();
        auto cspec = std::make_shared<std::string>();
        auto tol = std::make_shared<double>(1e-6);
        cmd->add_option("--n", *n, "order (at most 7)")->required();
        cmd->add_option("--spectrum", *spec, "comma-separated eigenvalues")->required();
        cmd->add_option("--complement-spectrum", *cspec,
                        "comma-separated complement eigenvalues")
            ->required();
        cmd->add_option("--tol", *tol, "matching tolerance")->capture_default_str();
        cmd->callback([&, n, spec, cspec, tol] {
            action = [&, n, spec, cspec, tol]() {
                const FindResult res = find_graph_by_spectra(
                    *n, parse_value_list(*spec), parse_value_list(*cspec), *tol);
                out << json(res).dump(2) << '\n';
                return 0;
            };
        });
    }

    // ---- corpus --------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("corpus", "emit a graph6 corpus, one per line");
        auto source = std::make_shared<std::string>("exhaustive");
        auto n = std::make_shared<int>(0);
        auto count = std::make_shared<std::uint64_t>(0);
        auto seed = std::make_shared<std::uint64_t>(1);
        auto out_path = std::make_shared<std::string>();
        cmd->add_option("--source", *source, "exhaustive | trees | sampled")
            ->capture_default_str();
        cmd->add_option("--n", *n, "order")->required();
        cmd->add_option("--count", *count, "graphs for sampled");
        cmd->add_option("--seed", *seed, "base seed for sampled")->capture_default_str();
        cmd->add_option("--out", *out_path, "write to a file instead of stdout");
        cmd->callback([&, source, n, count, seed, out_path] {
            action = [&, source, n, count, seed, out_path]() {
                std::ofstream file;
                std::ostream* os = &out;
                if (!out_path->empty()) {
                    file.open(*out_path, std::ios::trunc);
                    if (!file) throw std::runtime_error("cannot write " + *out_path);
                    os = &file;
                }
                auto emit = [&](const Graph& g) { *os << emit_graph6(g) << '\n'; };
                if (*source == "exhaustive") {
                    *os << "# corpus: exhaustive n=" << *n << '\n';
                    for (std::uint64_t i = 0; i < labeled_graph_count(*n); ++i)
                        emit(labeled_graph(*n, i));
                } else if (*source == "trees") {
                    *os << "# corpus: trees n=" << *n << '\n';
                    for (std::uint64_t i = 0; i < labeled_tree_count(*n); ++i)
                        emit(labeled_tree(*n, i));
                } else if (*source == "sampled") {
                    if (*count == 0)
                        throw std::invalid_argument("--source sampled needs --count");
                    *os << "# corpus: sampled n=" << *n << " count=" << *count
                        << " seed=" << *seed << '\n';
                    for (std::uint64_t i = 0; i < *count; ++i)
                        emit(sample_graph(*n, *seed + i));
                } else {
                    throw std::invalid_argument("unknown corpus source: " + *source);
                }
                return 0;
            };
        });
    }

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("tokenspectra");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return action ? action() : 2;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const CheckFailure& e) {
        err << "check failed: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace tokens
