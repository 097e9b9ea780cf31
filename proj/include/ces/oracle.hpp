#pragma once

#include <cstdint>
#include <vector>

#include "ces/backends.hpp"
#include "ces/overlap.hpp"

namespace ces {

/// Coefficients of a Hilbert-space vector in a fixed orthonormal basis.
/// truncation_tail is an upper bound on the relative squared-norm mass
/// discarded by truncation (0 for exactly representable vectors).
struct CoefficientVector {
    std::vector<Complex> entries;
    double truncation_tail = 0.0;

    std::size_t dim() const { return entries.size(); }
    /// Extends with zeros up to d entries (basis vectors beyond the
    /// truncation degree simply carry zero coefficient).
    void pad_to(std::size_t d);
};

/// The Bell-type state b as a dense matrix over the basis: b = sum W_ij e_i (x) e_j.
/// Frobenius norm 1.
struct CoefficientMatrix {
    std::size_t d = 0;
    std::vector<Complex> entries;  // row-major d*d

    Complex& at(std::size_t i, std::size_t j) { return entries[i * d + j]; }
    Complex at(std::size_t i, std::size_t j) const { return entries[i * d + j]; }
};

using DenseMatrix = CoefficientMatrix;

struct TruncationSpec {
    int max_degree = 512;   // hard cap per coordinate
    double tail_tol = 1e-12;
};

/// Expansion of the Segal-Bargmann coherent vector at p over the orthonormal
/// monomial basis e_m(z) = sqrt(k^m/m!) z^m (tensor basis for n > 1), truncated
/// so the relative discarded mass stays below spec.tail_tol.
CoefficientVector sb_coefficients(const Point& p, const BackendConfig& cfg,
                                  const TruncationSpec& spec);

/// Both coherent vectors over one shared truncated basis (the pointwise
/// degrees are maximized across p and q so the expansions are comparable).
std::pair<CoefficientVector, CoefficientVector> sb_pair_coefficients(
    const Point& p, const Point& q, const BackendConfig& cfg, const TruncationSpec& spec);

/// Exact (k+1)-dimensional expansion of the level-k projective-line coherent
/// vector: entry j is sqrt(C(k,j)) conj(p)^j.
CoefficientVector cp1_coefficients(const Point& p, const BackendConfig& cfg);

/// W = u u^T/|u|^2 + v v^T/|v|^2 (plain transpose, matching b's coefficients
/// over e_i (x) e_j), normalized to unit Frobenius norm.
CoefficientMatrix bell_matrix(const CoefficientVector& u, const CoefficientVector& v);

/// rho = W W^dagger: the matrix of the partial trace over the second factor.
DenseMatrix reduced_density(const CoefficientMatrix& w);

/// Eigenvalues of a Hermitian matrix via cyclic Jacobi rotations, descending.
std::vector<double> hermitian_spectrum(const DenseMatrix& m);

/// -sum lambda ln lambda over a probability spectrum; tiny negatives from
/// rounding are clamped to zero first.
double oracle_entropy(std::vector<double> spectrum);

/// Integrates the level-k projective-line inner product <z^i, z^j> by
/// quadrature (Gauss-Legendre radial, trapezoid angular) and returns the max
/// absolute deviation from the expected Gram matrix diag(1/C(k,j)).
double cp1_quadrature_check(int k);

/// Two linearly independent seeded complex-normal vectors, deterministic
/// per seed.
std::pair<CoefficientVector, CoefficientVector> random_vector_pair(int dim,
                                                                   std::uint64_t seed);

double binomial(int n, int r);

}  // namespace ces
