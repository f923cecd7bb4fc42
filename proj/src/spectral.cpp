#include "tokens/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tokens/errors.hpp"

namespace tokens {

namespace {

double offdiag_norm(const std::vector<double>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            const double x = a[p * n + q];
            s += x * x;
        }
    return std::sqrt(2.0 * s);
}

// Classic cyclic Jacobi on a full symmetric copy. Rows p and q are rotated
// in place and mirrored back into the columns, so both triangles stay exact.
// When vectors are requested we accumulate the transposed rotation product:
// its rows are contiguous and become the eigenvectors at the end.
SpectralResult jacobi(const Matrix& input, bool want_vectors) {
    const std::size_t n = input.rows();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = input(i, j);

    std::vector<double> w;  // row r = eigenvector r (transposed accumulator)
    if (want_vectors) {
        w.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) w[i * n + i] = 1.0;
    }

    const double norm = input.frobenius_norm();
    const double target = kJacobiRelTarget * norm;
    bool converged = (n <= 1) || offdiag_norm(a, n) <= target;

    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                if (std::abs(apq) < 1e-290) {  // denormal-range noise: just zero it
                    a[p * n + q] = a[q * n + p] = 0.0;
                    continue;
                }
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                double* rowp = &a[p * n];
                double* rowq = &a[q * n];
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = rowp[r];
                    const double arq = rowq[r];
                    rowp[r] = c * arp - s * arq;
                    rowq[r] = s * arp + c * arq;
                }
                rowp[p] = app - t * apq;
                rowq[q] = aqq + t * apq;
                rowp[q] = 0.0;
                rowq[p] = 0.0;
                // Mirror the two rotated rows back into their columns.
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    a[r * n + p] = rowp[r];
                    a[r * n + q] = rowq[r];
                }

                if (want_vectors) {
                    double* wp = &w[p * n];
                    double* wq = &w[q * n];
                    for (std::size_t r = 0; r < n; ++r) {
                        const double xp = wp[r];
                        const double xq = wq[r];
                        wp[r] = c * xp - s * xq;
                        wq[r] = s * xp + c * xq;
                    }
                }
            }
        }
        converged = offdiag_norm(a, n) <= target;
    }
    if (!converged)
        throw ConvergenceError("eigensolver: off-diagonal norm " +
                               std::to_string(offdiag_norm(a, n)) + " above target " +
                               std::to_string(target) + " after " +
                               std::to_string(kJacobiMaxSweeps) + " sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });

    SpectralResult res;
    res.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.eigenvalues[i] = a[order[i] * n + order[i]];
    if (want_vectors) {
        res.eigenvectors = Matrix(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const double* src = &w[order[j] * n];
            for (std::size_t i = 0; i < n; ++i) res.eigenvectors(i, j) = src[i];
        }
    }
    return res;
}

}  // namespace

SpectralResult eig_sym(const SymMatrix& m) { return jacobi(m.dense(), true); }

std::vector<double> eig_values(const SymMatrix& m) {
    return jacobi(m.dense(), false).eigenvalues;
}

SymMatrix laplacian(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    SymMatrix l(n);
    for (int v = 1; v <= g.vertex_count(); ++v)
        l.set(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(v - 1),
              static_cast<double>(g.degree(v)));
    for (auto [u, v] : g.edges())
        l.set(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1), -1.0);
    return l;
}

std::vector<double> laplacian_spectrum(const Graph& g) { return eig_values(laplacian(g)); }

double spectra_tol(double lambda_max, double base) {
    return base * std::max(1.0, lambda_max);
}

double algebraic_connectivity(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("algebraic_connectivity: need at least 2 vertices");
    return laplacian_spectrum(g)[1];
}

double spectral_radius(const Graph& g) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("spectral_radius: empty graph");
    return laplacian_spectrum(g).back();
}

std::vector<double> fiedler_vector(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("fiedler_vector: need at least 2 vertices");
    return eig_sym(laplacian(g)).eigenvectors.column(1);
}

double rayleigh_quotient(const Graph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.vertex_count())
        throw std::invalid_argument("rayleigh_quotient: length mismatch");
    const double xx = dot(x, x);
    if (xx == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");
    // x^T L x = sum over edges of (x_u - x_v)^2; cheaper and exact-er than
    // forming the matrix.
    double num = 0.0;
    for (auto [u, v] : g.edges()) {
        const double d = x[static_cast<std::size_t>(u - 1)] - x[static_cast<std::size_t>(v - 1)];
        num += d * d;
    }
    return num / xx;
}

bool is_embedding(const std::vector<double>& x, double tol) {
    double s = 0.0;
    double scale = 0.0;
    for (double v : x) {
        s += v;
        scale += std::abs(v);
    }
    if (scale == 0.0) return false;  // the zero vector embeds nothing
    return std::abs(s) <= tol * std::max(1.0, scale);
}

std::vector<double> lift_eigenvector(const BinomialMatrix& b, const std::vector<double>& v) {
    return b.apply(v);
}

std::vector<double> project_eigenvector(const BinomialMatrix& b, const std::vector<double>& u) {
    return b.apply_transpose(u);
}

std::vector<double> extend_embedding(const std::vector<double>& v, int attach_at) {
    const int n = static_cast<int>(v.size());
    if (n < 1) throw std::invalid_argument("extend_embedding: empty vector");
    if (attach_at < 1 || attach_at > n)
        throw std::invalid_argument("extend_embedding: attach vertex out of range");
    const double va = v[static_cast<std::size_t>(attach_at - 1)];
    std::vector<double> w(static_cast<std::size_t>(n) + 1);
    const double shift = va / static_cast<double>(n + 1);
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] - shift;
    w[static_cast<std::size_t>(n)] = static_cast<double>(n) * shift;
    return w;
}

}  // namespace tokens
