#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hodgekit/complex.hpp"
#include "hodgekit/hodge.hpp"
#include "hodgekit/sparse_matrix.hpp"

namespace hodgekit {

/// Linear map from the stalk of `face` to the stalk of `coface`,
/// shape stalk(coface) x stalk(face).
struct RestrictionMap {
    Simplex face;
    Simplex coface;
    Eigen::MatrixXd matrix;
};

inline constexpr double kCommuteTol = 1e-10;

/// Cellular sheaf of finite-dimensional real vector spaces over a complex.
class Sheaf {
public:
    /// Validates stalks and restriction maps against `c`.
    ///
    /// Every simplex needs a stalk. Every face/coface pair with dimensions
    /// differing by one needs exactly one map of matching shape; pairs where
    /// either stalk is zero-dimensional may be omitted. Compositions along the
    /// two routes from an n-simplex to each (n+2)-coface must agree within
    /// `commute_tol`, otherwise NonCommutingRestrictions is thrown.
    static Sheaf build(const SimplicialComplex& c, const std::map<Simplex, std::size_t>& stalks,
                       const std::vector<RestrictionMap>& restrictions,
                       double commute_tol = kCommuteTol);

    /// Stalk R^k everywhere with identity restrictions.
    static Sheaf constant(const SimplicialComplex& c, std::size_t k = 1);

    std::size_t stalk_dim(const Simplex& s) const;
    const std::map<Simplex, std::size_t>& stalks() const noexcept { return stalks_; }

    /// Throws MissingRestriction when no map is stored for the pair.
    const Eigen::MatrixXd& restriction(const Simplex& face, const Simplex& coface) const;

    /// Sum of stalk dimensions over the n-simplices of `c`.
    std::size_t total_dim(const SimplicialComplex& c, int n) const;
    /// Offsets of each n-simplex's block in a stacked n-assignment (size #C_n + 1).
    std::vector<std::size_t> offsets(const SimplicialComplex& c, int n) const;

private:
    std::map<Simplex, std::size_t> stalks_;
    std::map<std::pair<Simplex, Simplex>, Eigen::MatrixXd> maps_;
};

/// Stacked per-simplex values for one dimension, in canonical simplex order.
struct Assignment {
    int dim = 0;
    std::vector<double> values;
};

/// δ^S_n: rows are (n+1)-stalks, columns n-stalks; block (τ, σ) is
/// (-1)^i F_{σ⊆τ} where σ is τ with its i-th vertex deleted. For n = -1 the
/// empty map into the 0-stalks is returned.
SparseMatrix sheaf_coboundary(const SimplicialComplex& c, const Sheaf& sh, int n);

struct ConsistencyResult {
    bool consistent = false;
    Assignment residual;
};

inline constexpr double kConsistencyTol = 1e-9;

/// Residual δ^S_n x; consistent when its max-norm is at most `tol`.
ConsistencyResult check_consistency(const SimplicialComplex& c, const Sheaf& sh, const Assignment& x,
                                    double tol = kConsistencyTol);

/// dim H^n = nullity(δ^S_n) - rank(δ^S_{n-1}) for n = 0..max_dim.
std::vector<std::size_t> sheaf_cohomology_dims(const SimplicialComplex& c, const Sheaf& sh,
                                               std::optional<double> tol = std::nullopt);

std::vector<std::size_t> stalk_sizes(const SimplicialComplex& c, const Sheaf& sh);

/// up = (δ_n)^* δ_n, down = δ_{n-1} (δ_{n-1})^*, with adjoints taken for the
/// stalk weights `w` (sized by stalk_sizes).
HodgeOperators sheaf_laplacian(const SimplicialComplex& c, const Sheaf& sh, int n,
                               const InnerProductWeights& w);
HodgeOperators sheaf_laplacian(const SimplicialComplex& c, const Sheaf& sh, int n);

} // namespace hodgekit
