#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hodgekit/complex.hpp"
#include "hodgekit/sparse_matrix.hpp"

namespace hodgekit {

/// Diagonal inner-product weights, one strictly positive vector per dimension.
class InnerProductWeights {
public:
    InnerProductWeights() = default;

    /// All-ones weights sized to the simplex counts of `c`.
    static InnerProductWeights unit(const SimplicialComplex& c);
    /// All-ones weights for the given per-dimension sizes.
    static InnerProductWeights unit(const std::vector<std::size_t>& sizes);

    /// Throws ShapeMismatch when a length disagrees with `sizes` and
    /// Validation when a weight is not strictly positive.
    static InnerProductWeights from(std::vector<std::vector<double>> per_dim,
                                    const std::vector<std::size_t>& sizes);

    /// Weights of dimension n; an empty vector outside the stored range.
    const std::vector<double>& at(int n) const;
    int dims() const noexcept { return static_cast<int>(per_dim_.size()); }
    bool is_unit() const noexcept;

private:
    std::vector<std::vector<double>> per_dim_;
};

std::vector<std::size_t> simplex_counts(const SimplicialComplex& c);

double inner_product(const Cochain& x, const Cochain& y, std::span<const double> weights);
double inner_product(const Cochain& x, const Cochain& y, const InnerProductWeights& w);
double norm(const Cochain& x, const InnerProductWeights& w);

/// Adjoint of ∂_n with respect to the weighted inner products:
/// W_n^{-1} ∂_n^T W_{n-1}. With unit weights this is exactly ∂_n^T.
SparseMatrix adjoint_boundary(const SimplicialComplex& c, int n, const InnerProductWeights& w);

/// Up, down and full Laplacians at one dimension.
///
/// For simplicial Laplacians `down_adjoint` is ∂_n^* and `up_adjoint` is
/// ∂_{n+1}^*; the sheaf Laplacian fills them with the adjoints of δ_{n-1}
/// and δ_n. `full` is self-adjoint for `weights`.
struct HodgeOperators {
    int dim = 0;
    SparseMatrix up;
    SparseMatrix down;
    SparseMatrix full;
    SparseMatrix down_adjoint;
    SparseMatrix up_adjoint;
    std::vector<double> weights;

    std::size_t size() const noexcept { return full.rows(); }

    /// W^{1/2} L W^{-1/2}: a symmetric matrix similar to `full`.
    SparseMatrix symmetrized() const;
};

/// L_n^up = ∂_{n+1} ∂_{n+1}^*, L_n^down = ∂_n^* ∂_n, L_n = up + down.
/// Missing boundary maps contribute zero blocks.
HodgeOperators hodge_laplacian(const SimplicialComplex& c, int n, const InnerProductWeights& w);
HodgeOperators hodge_laplacian(const SimplicialComplex& c, int n);

/// Relative threshold below which a Laplacian eigenvalue counts as zero.
inline constexpr double kHarmonicRelTol = 1e-8;

/// Basis of ker L_n, orthonormal for the operators' weights. Eigenvalues at
/// or below `tol` (default kHarmonicRelTol * λ_max) are treated as zero.
std::vector<Cochain> harmonic_basis(const HodgeOperators& ops, std::optional<double> tol = std::nullopt);

struct HodgeDecomposition {
    Cochain irrot;
    Cochain harmonic;
    Cochain solenoid;
};

/// Splits an n-signal into its parts in im ∂_n^*, ker L_n and im ∂_{n+1}.
/// The two image parts are weighted least-squares projections; `tol` is the
/// relative rank threshold of those solves (default kRelativeRankTol).
HodgeDecomposition hodge_decompose(const Cochain& s, const SimplicialComplex& c, int n,
                                   const InnerProductWeights& w,
                                   std::optional<double> tol = std::nullopt);
HodgeDecomposition hodge_decompose(const Cochain& s, const SimplicialComplex& c, int n);

// Discrete vector calculus on a complex.

/// Edge finite differences ∂_1^T f of a vertex function.
Cochain gradient(const SimplicialComplex& c, const Cochain& f);
/// Net node flow ∂_1 s of an edge signal.
Cochain divergence(const SimplicialComplex& c, const Cochain& s);
/// Circulation ∂_2^T s of an edge signal around each triangle.
Cochain curl(const SimplicialComplex& c, const Cochain& s);
/// Rotational edge flow ∂_2 t induced by a triangle signal.
Cochain curl_adjoint(const SimplicialComplex& c, const Cochain& t);

} // namespace hodgekit
