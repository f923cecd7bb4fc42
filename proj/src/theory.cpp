#include "tokens/theory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tokens/enumerate.hpp"
#include "tokens/errors.hpp"
#include "tokens/families.hpp"
#include "tokens/graph6.hpp"

namespace tokens {

namespace {

// Token level j of g, accepting j = 0 (a single vertex, spectrum {0}).
std::vector<double> token_level_spectrum(const Graph& g, int j, std::uint64_t guard) {
    if (j == 0) return {0.0};
    return laplacian_spectrum(token_graph(g, j, guard).graph);
}

std::string describe(const std::vector<double>& values, double tol) {
    return cluster_eigenvalues(values, tol).to_string();
}

struct PairingWorkspace {
    PairingCertificate cert;
    // Eigenvalues of the restricted operator and the matching token-space
    // eigenvectors, one entry per level.
    std::vector<std::vector<double>> level_values;
    std::vector<Matrix> level_vectors;
};

PairingWorkspace build_pairing(const Graph& g, int k, double tol_base, std::uint64_t guard) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("check_pairing: need n >= 2");
    if (k < 1 || k > n - 1) throw std::invalid_argument("check_pairing: need 1 <= k <= n-1");

    const TokenGraph tg = token_graph(g, k, guard);
    const TokenGraph tj = token_graph(build_family(FamilyKind::complete, n), k, guard);
    const std::vector<double> direct_g = laplacian_spectrum(tg.graph);
    const std::vector<double> direct_c =
        laplacian_spectrum(token_graph(complement(g), k, guard).graph);

    const SymMatrix lf = laplacian(tg.graph);
    const double lf_norm = lf.frobenius_norm();
    const SpectralResult ej = eig_sym(laplacian(tj.graph));

    const EigMultiset johnson = johnson_spectrum(n, k);
    const std::size_t big_n = static_cast<std::size_t>(tg.graph.vertex_count());

    const double lam_scale = std::max({johnson.clusters.back().value,
                                       direct_g.empty() ? 0.0 : direct_g.back(),
                                       direct_c.empty() ? 0.0 : direct_c.back()});
    const double tol = spectra_tol(lam_scale, tol_base);

    PairingWorkspace ws;
    ws.cert.n = n;
    ws.cert.k = k;
    ws.cert.tol = 2.0 * tol;

    struct Raw {
        double value;
        double complement_raw;
        int level;
        double johnson_value;
    };
    std::vector<Raw> raws;
    raws.reserve(big_n);

    std::size_t offset = 0;
    for (const auto& cluster : johnson.clusters) {
        const int level = static_cast<int>(&cluster - johnson.clusters.data());
        const std::size_t m = static_cast<std::size_t>(cluster.multiplicity);
        ws.cert.level_counts.push_back(cluster.multiplicity);

        // The numerically computed Johnson eigenvalues must sit where the
        // closed form says; positional grouping is then safe.
        for (std::size_t i = 0; i < m; ++i) {
            if (std::abs(ej.eigenvalues[offset + i] - cluster.value) > tol)
                throw CheckFailure("pairing: Johnson eigenvalue " +
                                   std::to_string(ej.eigenvalues[offset + i]) +
                                   " strays from closed-form " + std::to_string(cluster.value));
        }

        Matrix p(big_n, m);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < big_n; ++i) p(i, j) = ej.eigenvectors(i, offset + j);

        // Restrict the token Laplacian to this Johnson eigenspace and insist
        // the space is actually invariant: anything leaking out would make
        // the certificate meaningless.
        const Matrix lp = lf.dense() * p;
        Matrix r = p.transposed() * lp;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b) {
                const double avg = 0.5 * (r(a, b) + r(b, a));
                r(a, b) = avg;
                r(b, a) = avg;
            }
        const double leak = (lp - p * r).frobenius_norm() / std::max(1.0, lf_norm);
        ws.cert.max_invariance_ratio = std::max(ws.cert.max_invariance_ratio, leak);
        if (leak > tol_base)
            throw InvarianceError("pairing: level " + std::to_string(level) +
                                  " eigenspace is not invariant (leak ratio " +
                                  std::to_string(leak) + ")");

        SymMatrix rs(m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a; b < m; ++b) rs.set(a, b, r(a, b));
        const SpectralResult er = eig_sym(rs);

        ws.level_values.push_back(er.eigenvalues);
        ws.level_vectors.push_back(p * er.eigenvectors);
        for (double mu : er.eigenvalues)
            raws.push_back({mu, cluster.value - mu, level, cluster.value});
        offset += m;
    }

    // The restriction eigenvalues, pooled across levels, must reproduce the
    // directly computed token spectrum of g ...
    std::vector<double> pooled;
    pooled.reserve(raws.size());
    for (const auto& r : raws) pooled.push_back(r.value);
    std::sort(pooled.begin(), pooled.end());
    for (std::size_t i = 0; i < pooled.size(); ++i) {
        if (std::abs(pooled[i] - direct_g[i]) > tol)
            throw CheckFailure("pairing: restricted spectrum " + describe(pooled, tol) +
                               " does not match the token spectrum " + describe(direct_g, tol));
    }

    // ... and their Johnson complements must reproduce the token spectrum of
    // the complement graph. Match sorted-to-sorted and keep the direct value.
    std::vector<std::size_t> by_complement(raws.size());
    std::iota(by_complement.begin(), by_complement.end(), std::size_t{0});
    std::stable_sort(by_complement.begin(), by_complement.end(),
                     [&](std::size_t a, std::size_t b) {
                         return raws[a].complement_raw < raws[b].complement_raw;
                     });
    std::vector<double> matched(raws.size());
    for (std::size_t i = 0; i < by_complement.size(); ++i) {
        const Raw& r = raws[by_complement[i]];
        if (std::abs(r.complement_raw - direct_c[i]) > tol)
            throw CheckFailure(
                "pairing: complement of restricted spectrum does not match the token "
                "spectrum of the complement graph (wanted " +
                std::to_string(r.complement_raw) + ", nearest " + std::to_string(direct_c[i]) +
                ")");
        matched[by_complement[i]] = direct_c[i];
    }

    for (std::size_t i = 0; i < raws.size(); ++i) {
        PairingCertificate::Entry e;
        e.value = raws[i].value;
        e.complement_value = matched[i];
        e.level = raws[i].level;
        e.johnson_value = raws[i].johnson_value;
        e.residual = std::abs(e.value + e.complement_value - e.johnson_value);
        if (e.residual > ws.cert.tol)
            throw CheckFailure("pairing: residual " + std::to_string(e.residual) +
                               " exceeds tolerance " + std::to_string(ws.cert.tol));
        ws.cert.max_residual = std::max(ws.cert.max_residual, e.residual);
        ws.cert.entries.push_back(e);
    }
    std::stable_sort(ws.cert.entries.begin(), ws.cert.entries.end(),
                     [](const auto& a, const auto& b) {
                         return a.level != b.level ? a.level < b.level : a.value < b.value;
                     });
    return ws;
}

}  // namespace

EigMultiset johnson_spectrum(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw std::invalid_argument("johnson_spectrum: need 1 <= k <= n-1");
    const int d = std::min(k, n - k);
    EigMultiset ms;
    for (int j = 0; j <= d; ++j) {
        const std::uint64_t mult = binom(n, j) - (j == 0 ? 0 : binom(n, j - 1));
        ms.clusters.push_back(
            {static_cast<double>(j) * (n + 1 - j), static_cast<int>(mult)});
    }
    return ms;
}

ContainmentReport check_containment(const Graph& g, int k, double tol_base,
                                    std::uint64_t guard) {
    const int n = g.vertex_count();
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("check_containment: need 1 <= k <= n");

    ContainmentReport rep;
    rep.n = n;
    rep.k = k;
    rep.source_spectrum = laplacian_spectrum(g);
    rep.token_spectrum = token_level_spectrum(g, k, guard);
    const int prev = k == 1 ? 1 : k - 1;
    rep.previous_spectrum =
        prev == k ? rep.token_spectrum : token_level_spectrum(g, prev, guard);

    const double scale = std::max(rep.token_spectrum.back(), rep.source_spectrum.back());
    rep.tol = spectra_tol(scale, tol_base);
    rep.source_contained =
        multiset_contains(rep.token_spectrum, rep.source_spectrum, rep.tol);

    // The level k-1 spectrum can only embed in level k while the vertex
    // counts are nondecreasing, i.e. up to the middle level.
    rep.chain_checked = binom(n, prev) <= binom(n, k);
    if (rep.chain_checked) {
        auto diff = multiset_difference(rep.token_spectrum, rep.previous_spectrum, rep.tol);
        rep.chain_contained = diff.contained;
        rep.new_values = std::move(diff.remainder);
    }
    return rep;
}

PairingCertificate check_pairing(const Graph& g, int k, double tol_base,
                                 std::uint64_t guard) {
    return build_pairing(g, k, tol_base, guard).cert;
}

LevelPartition level_partition(const Graph& g, int k, double tol_base,
                               std::uint64_t guard) {
    const int n = g.vertex_count();
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("level_partition: need 1 <= k <= n/2");

    PairingWorkspace ws = build_pairing(g, k, tol_base, guard);
    const Graph gc = complement(g);

    LevelPartition part;
    part.n = n;
    part.k = k;
    part.tol = ws.cert.tol;

    const BinomialMatrix b(n, k);
    for (std::size_t level = 2; level < ws.level_vectors.size(); ++level) {
        const Matrix& u = ws.level_vectors[level];
        for (std::size_t j = 0; j < u.cols(); ++j) {
            const auto col = u.column(j);
            const double ratio = norm2(b.apply_transpose(col)) / norm2(col);
            part.max_projection_ratio = std::max(part.max_projection_ratio, ratio);
        }
    }

    std::ostringstream detail;
    std::vector<double> prev_g, prev_c;
    std::vector<double> cur_g, cur_c;
    bool all_ok = true;
    if (part.max_projection_ratio > part.tol) {
        all_ok = false;
        detail << "levels >= 2 leak outside the lift kernel (ratio "
               << part.max_projection_ratio << " > " << part.tol << "); ";
    }
    for (int level = 0; level <= k; ++level) {
        LevelPartition::Level lv;
        lv.level = level;
        lv.johnson_value = static_cast<double>(level) * (n + 1 - level);
        for (const auto& e : ws.cert.entries)
            if (e.level == level) lv.pairs.push_back(e);

        cur_g = token_level_spectrum(g, level, guard);
        cur_c = token_level_spectrum(gc, level, guard);
        if (level == 0) {
            lv.fresh_values = {0.0};
            lv.fresh_complement_values = {0.0};
        } else {
            auto dg = multiset_difference(cur_g, prev_g, part.tol);
            auto dc = multiset_difference(cur_c, prev_c, part.tol);
            lv.fresh_values = dg.remainder;
            lv.fresh_complement_values = dc.remainder;
            if (!dg.contained || !dc.contained) {
                lv.cross_check_ok = false;
                all_ok = false;
                detail << "level " << level << ": consecutive spectra do not nest; ";
                part.levels.push_back(std::move(lv));
                prev_g = std::move(cur_g);
                prev_c = std::move(cur_c);
                continue;
            }
        }

        std::vector<double> lam, lam_c;
        for (const auto& e : lv.pairs) {
            lam.push_back(e.value);
            lam_c.push_back(e.complement_value);
        }
        const bool ok_g = multiset_equal(lam, lv.fresh_values, part.tol);
        const bool ok_c = multiset_equal(lam_c, lv.fresh_complement_values, part.tol);
        lv.cross_check_ok = ok_g && ok_c;
        if (!lv.cross_check_ok) {
            all_ok = false;
            detail << "level " << level << ": pairs " << describe(lam, part.tol)
                   << " / fresh " << describe(lv.fresh_values, part.tol);
            if (!ok_c)
                detail << ", complement pairs " << describe(lam_c, part.tol) << " / fresh "
                       << describe(lv.fresh_complement_values, part.tol);
            detail << "; ";
        }
        part.levels.push_back(std::move(lv));
        prev_g = std::move(cur_g);
        prev_c = std::move(cur_c);
    }

    part.detail = detail.str();
    if (!g.is_connected() || !gc.is_connected())
        part.status = LevelPartition::Status::hypothesis_unmet;
    else
        part.status = all_ok ? LevelPartition::Status::pass : LevelPartition::Status::mismatch;
    return part;
}

ConjectureVerdict check_conjecture(const Graph& g, int k, double tol, std::uint64_t guard) {
    const int n = g.vertex_count();
    if (n < 2 || k < 1 || k > n - 1)
        throw std::invalid_argument("check_conjecture: need n >= 2 and 1 <= k <= n-1");
    ConjectureVerdict v;
    v.graph6 = emit_graph6(g);
    v.n = n;
    v.k = k;
    v.alpha_source = algebraic_connectivity(g);
    const TokenGraph tg = token_graph(g, k, guard);
    v.alpha_token = tg.graph.vertex_count() < 2 ? v.alpha_source
                                                : algebraic_connectivity(tg.graph);
    v.gap = v.alpha_source - v.alpha_token;
    v.holds = std::abs(v.gap) <= tol;
    v.transfer_applicable = transfer_applies(g, k);
    return v;
}

double transfer_threshold(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("transfer_threshold: need k, n >= 1");
    return static_cast<double>(k) * (n + k - 3) / (2 * k - 1);
}

bool transfer_applies(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (k < 1 || 2 * k > n) return false;
    return static_cast<double>(g.max_degree()) >= transfer_threshold(k, n);
}

DegreeBoundsReport check_degree_bounds(const Graph& g, int k, double tol_base,
                                       std::uint64_t guard) {
    const int n = g.vertex_count();
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("check_degree_bounds: need 1 <= k <= n");

    const TokenGraph tg = token_graph(g, k, guard);
    DegreeBoundsReport rep;
    rep.n = n;
    rep.k = k;

    auto fill = [](DegreeBoundsReport::Side& side, const Graph& h, double tol) {
        side.max_degree = h.max_degree();
        side.lambda_max = h.vertex_count() >= 1 ? spectral_radius(h) : 0.0;
        side.has_edges = h.edge_count() >= 1;
        if (side.has_edges) {
            side.lower_ok = 1.0 + side.max_degree <= side.lambda_max + tol;
            side.upper_ok = side.lambda_max <= 2.0 * side.max_degree + tol;
        }
    };

    // One tolerance for the whole report, scaled by the larger spectrum.
    const double scale =
        std::max(g.vertex_count() >= 1 ? spectral_radius(g) : 0.0,
                 tg.graph.vertex_count() >= 1 ? spectral_radius(tg.graph) : 0.0);
    rep.tol = spectra_tol(scale, tol_base);
    fill(rep.source, g, rep.tol);
    fill(rep.token, tg.graph, rep.tol);
    rep.degree_cap = k * rep.source.max_degree;
    rep.degree_cap_ok = rep.token.max_degree <= rep.degree_cap;
    return rep;
}

CollapseReport check_collapse_monotonicity(const Graph& tree, int u, int v, double tol) {
    if (!tree.is_tree())
        throw std::invalid_argument("check_collapse_monotonicity: input is not a tree");
    if (tree.vertex_count() < 3)
        throw std::invalid_argument("check_collapse_monotonicity: need at least 3 vertices");
    if (!tree.has_edge(u, v))
        throw std::invalid_argument("check_collapse_monotonicity: {u,v} is not an edge");
    CollapseReport rep;
    rep.alpha_base = algebraic_connectivity(tree);
    rep.alpha_collapsed = algebraic_connectivity(collapse_edge(tree, u, v));
    rep.non_decreasing = rep.alpha_collapsed >= rep.alpha_base - tol;
    return rep;
}

FindResult find_graph_by_spectra(int n, const std::vector<double>& spectrum,
                                 const std::vector<double>& complement_spectrum,
                                 double tol) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("find_graph_by_spectra: supported for 1 <= n <= 7");
    if (static_cast<int>(spectrum.size()) != n ||
        static_cast<int>(complement_spectrum.size()) != n)
        throw std::invalid_argument("find_graph_by_spectra: target spectra must have n values");

    // The Laplacian trace is twice the edge count: a free exact filter.
    const double half = std::accumulate(spectrum.begin(), spectrum.end(), 0.0) / 2.0;
    const auto edges = static_cast<std::uint64_t>(std::llround(half));
    if (std::abs(half - static_cast<double>(edges)) > 0.49 || edges > binom(n, 2))
        throw NoMatchError("find_graph_by_spectra: spectrum trace does not correspond to "
                           "an achievable edge count");

    const std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t index = 0; index < count; ++index) {
        if (std::popcount(index) != static_cast<int>(edges)) continue;
        Graph g = labeled_graph(n, index);
        if (!multiset_equal(laplacian_spectrum(g), spectrum, tol)) continue;
        if (!multiset_equal(laplacian_spectrum(complement(g)), complement_spectrum, tol))
            continue;
        return {g, emit_graph6(g), index};
    }
    throw NoMatchError("find_graph_by_spectra: no labeled graph on " + std::to_string(n) +
                       " vertices has the requested spectra");
}

std::vector<std::pair<double, std::vector<double>>> token_kernel_eigenpairs(
    const Graph& g, int k, double tol_base, std::uint64_t guard) {
    const int n = g.vertex_count();
    if (n < 2 || k < 1 || k > n - 1)
        throw std::invalid_argument("token_kernel_eigenpairs: need 1 <= k <= n-1");

    const TokenGraph tg = token_graph(g, k, guard);
    const SpectralResult eig = eig_sym(laplacian(tg.graph));
    const double tol = spectra_tol(eig.eigenvalues.back(), tol_base);
    const EigMultiset clusters = cluster_eigenvalues(eig.eigenvalues, tol);

    const BinomialMatrix b(n, k);
    // (B^T B)^{-1} in closed form: B^T B = a I + c J with a, c below.
    const double c_off = k >= 2 ? static_cast<double>(binom(n - 2, k - 2)) : 0.0;
    const double a_diag = static_cast<double>(binom(n - 1, k - 1)) - c_off;
    const double j_coef = c_off / (a_diag + n * c_off);

    auto kernel_part = [&](const std::vector<double>& q) {
        std::vector<double> bt = b.apply_transpose(q);
        const double mean = std::accumulate(bt.begin(), bt.end(), 0.0) * j_coef;
        for (double& x : bt) x = (x - mean) / a_diag;
        const std::vector<double> lifted = b.apply(bt);
        std::vector<double> z(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) z[i] = q[i] - lifted[i];
        return z;
    };

    std::vector<std::pair<double, std::vector<double>>> out;
    std::size_t offset = 0;
    for (const auto& cluster : clusters.clusters) {
        const std::size_t m = static_cast<std::size_t>(cluster.multiplicity);
        std::vector<std::vector<double>> z;
        z.reserve(m);
        for (std::size_t j = 0; j < m; ++j)
            z.push_back(kernel_part(eig.eigenvectors.column(offset + j)));
        // The kernel directions have Gram eigenvalues near 1, the rest near
        // 0; recombine and keep the former.
        SymMatrix gram(m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t bix = a; bix < m; ++bix) gram.set(a, bix, dot(z[a], z[bix]));
        const SpectralResult ge = eig_sym(gram);
        for (std::size_t j = 0; j < m; ++j) {
            const double gamma = ge.eigenvalues[j];
            if (gamma <= 0.5) continue;
            std::vector<double> u(z[0].size(), 0.0);
            for (std::size_t a = 0; a < m; ++a) {
                const double w = ge.eigenvectors(a, j);
                for (std::size_t i = 0; i < u.size(); ++i) u[i] += w * z[a][i];
            }
            const double inv = 1.0 / std::sqrt(gamma);
            for (double& x : u) x *= inv;
            out.emplace_back(cluster.value, std::move(u));
        }
        offset += m;
    }
    return out;
}

}  // namespace tokens
