#pragma once

#include <vector>

#include "tokens/graph.hpp"
#include "tokens/matrix.hpp"
#include "tokens/token_graph.hpp"

namespace tokens {

// Cyclic Jacobi: at most this many full sweeps before giving up. Generic
// spectra converge quadratically in ~10 sweeps; matrices with huge exactly
// degenerate eigenspaces (Johnson graphs of order ~250 have multiplicities
// near 100) fall back to linear convergence in the last decades and can
// genuinely need 60+ sweeps to reach the off-diagonal target.
inline constexpr int kJacobiMaxSweeps = 160;
// Converged when the off-diagonal Frobenius norm falls below this times the
// Frobenius norm of the input.
inline constexpr double kJacobiRelTarget = 1e-12;

// Default relative floor for deciding when two computed eigenvalues are
// "the same": tolerances scale as base * max(1, lambda_max).
inline constexpr double kSpectraTolBase = 1e-8;

struct SpectralResult {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // orthonormal columns, matching order
};

SpectralResult eig_sym(const SymMatrix& m);
// Same iteration without accumulating vectors; noticeably faster in sweeps.
std::vector<double> eig_values(const SymMatrix& m);

SymMatrix laplacian(const Graph& g);
std::vector<double> laplacian_spectrum(const Graph& g);

double spectra_tol(double lambda_max, double base = kSpectraTolBase);

// Second-smallest Laplacian eigenvalue; requires n >= 2.
double algebraic_connectivity(const Graph& g);
double spectral_radius(const Graph& g);  // largest Laplacian eigenvalue
std::vector<double> fiedler_vector(const Graph& g);

// x^T L x / x^T x for nonzero x. An "embedding" is a vector orthogonal to
// the all-ones vector; the quotient then upper-bounds nothing less than the
// algebraic connectivity.
double rayleigh_quotient(const Graph& g, const std::vector<double>& x);
bool is_embedding(const std::vector<double>& x, double tol = 1e-12);

// Membership-matrix transport between source level 1 and token level k.
std::vector<double> lift_eigenvector(const BinomialMatrix& b, const std::vector<double>& v);
std::vector<double> project_eigenvector(const BinomialMatrix& b, const std::vector<double>& u);

// Extends an embedding of an n-vertex graph to n+1 vertices when a new
// vertex is attached at vertex a, shifting so the result still sums to zero:
//   w(i) = v(i) - v(a)/(n+1) for old vertices, w(n+1) = n*v(a)/(n+1).
std::vector<double> extend_embedding(const std::vector<double>& v, int attach_at);

}  // namespace tokens
