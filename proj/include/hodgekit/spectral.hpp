#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hodgekit/complex.hpp"
#include "hodgekit/hodge.hpp"
#include "hodgekit/sparse_matrix.hpp"

namespace hodgekit {

/// Full eigendecomposition L = U Λ U^T of a symmetric operator.
struct SpectralBasis {
    int dim = 0;
    Eigen::VectorXd eigenvalues;  // ascending
    Eigen::MatrixXd eigenvectors; // orthonormal columns

    std::size_t size() const noexcept { return static_cast<std::size_t>(eigenvalues.size()); }
    double lambda_max() const noexcept;
};

inline constexpr double kSymmetryRelTol = 1e-10;

/// Decomposes a symmetric real matrix. Each eigenvector is signed so that its
/// largest-magnitude entry is positive (lowest index on ties). Throws
/// NotSymmetric when |L - L^T| exceeds `symmetry_tol` times max|L|.
SpectralBasis eigendecompose(const SparseMatrix& L, std::optional<double> symmetry_tol = std::nullopt);

/// Eigenbasis of the symmetrized Laplacian of `ops`.
SpectralBasis spectral_basis(const HodgeOperators& ops);

/// x̂ = U^T x.
Cochain sft(const Cochain& x, const SpectralBasis& basis);
/// x = U x̂.
Cochain inverse_sft(const Cochain& xhat, const SpectralBasis& basis);

struct SpectraReport {
    std::vector<double> nonzero_l0;
    std::vector<double> nonzero_l1;
    std::size_t zero_mult_l0 = 0;
    std::size_t zero_mult_l1 = 0;
    bool agree = false;
    long zero_mult_diff = 0;
    long b0_minus_b1 = 0;
};

inline constexpr double kSpectrumMatchRelTol = 1e-6;

/// Compares the vertex and edge Laplacian spectra of a graph. Nonzero
/// eigenvalues are matched as sorted vectors within `tol` (default
/// kSpectrumMatchRelTol) times λ_max. Throws NotAGraph when max_dim > 1.
SpectraReport compare_spectra(const SimplicialComplex& c, std::optional<double> tol = std::nullopt);

} // namespace hodgekit
