#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hodgekit/complex.hpp"
#include "hodgekit/sparse_matrix.hpp"

namespace hodgekit {

struct RankProfile {
    std::size_t rank = 0;
    std::size_t nullity = 0;
    std::size_t cols = 0;
};

/// Exact rank over GF(2) by xor elimination. Columns are processed left to
/// right; the pivot of each column is the lowest-index unused row holding a 1.
RankProfile rank_gf2(const SparseMatrix& m);

/// Default relative tolerance for real numerical rank.
inline constexpr double kRelativeRankTol = 1e-9;

/// Numerical rank by Gaussian elimination with partial pivoting. A pivot
/// counts when its magnitude exceeds `tol`, which defaults to
/// kRelativeRankTol times the largest absolute entry of `m`.
RankProfile rank_real(const SparseMatrix& m, std::optional<double> tol = std::nullopt);

/// Rank in the matrix's own field, with the default tolerance for reals.
RankProfile rank(const SparseMatrix& m);

/// An elementary operation over GF(2). For Add, line `dst` += line `src`.
struct Gf2Op {
    enum class Kind { Swap, Add };
    Kind kind;
    std::size_t src;
    std::size_t dst;

    bool operator==(const Gf2Op&) const = default;
};

struct SmithNormalForm {
    std::size_t diag_count = 0;
    std::vector<Gf2Op> row_ops;
    std::vector<Gf2Op> col_ops;
};

/// Reduction of a GF(2) matrix to a leading identity block by row and column
/// operations. Replaying `row_ops` on rows and `col_ops` on columns, each in
/// order, turns `m` into diag(1,..,1,0,..) with `diag_count` ones.
SmithNormalForm snf_gf2(const SparseMatrix& m);

/// Applies the logged operations of `snf` to `m` (GF(2)).
SparseMatrix replay_snf(const SparseMatrix& m, const SmithNormalForm& snf);

using BettiVector = std::vector<std::size_t>;

/// b_n = (#C_n - rank ∂_n) - rank ∂_{n+1}, with ∂_0 the zero map.
/// `real_tol` overrides the real rank tolerance and is ignored for GF(2).
BettiVector betti(const SimplicialComplex& c, Field field, std::optional<double> real_tol = std::nullopt);

/// Betti numbers over GF(2), cross-checked with the reals. Throws Numerical
/// when the two disagree.
BettiVector betti_checked(const SimplicialComplex& c);

/// Components by union-find over the edges.
std::size_t connected_components(const SimplicialComplex& c);

} // namespace hodgekit
