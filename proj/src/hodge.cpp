#include "hodgekit/hodge.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hodgekit/chains.hpp"
#include "hodgekit/error.hpp"
#include "hodgekit/homology.hpp"
#include "hodgekit/spectral.hpp"

namespace hodgekit {

namespace {

std::vector<double> mapped(const std::vector<double>& w, double (*fn)(double))
{
    std::vector<double> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = fn(w[i]);
    return out;
}

double reciprocal(double x) { return 1.0 / x; }
double root(double x) { return std::sqrt(x); }
double inverse_root(double x) { return 1.0 / std::sqrt(x); }

const std::vector<double>& weights_for(const SimplicialComplex& c, const InnerProductWeights& w, int n)
{
    const auto& wn = w.at(n);
    if (wn.size() != c.count(n))
        throw Error(ErrorCode::ShapeMismatch, "weights for dimension " + std::to_string(n) +
                                                  " have length " + std::to_string(wn.size()) +
                                                  ", expected " + std::to_string(c.count(n)));
    return wn;
}

void require_dim(const SimplicialComplex& c, int n)
{
    if (n < 0 || n > c.max_dim())
        throw Error(ErrorCode::DimensionOutOfRange,
                    "dimension " + std::to_string(n) + " outside [0, " +
                        std::to_string(c.max_dim()) + "]");
}

void require_cochain(const SimplicialComplex& c, const Cochain& x, int n)
{
    if (x.dim != n || x.size() != c.count(n))
        throw Error(ErrorCode::ShapeMismatch,
                    "expected a " + std::to_string(n) + "-cochain of length " +
                        std::to_string(c.count(n)) + ", got dimension " + std::to_string(x.dim) +
                        " with length " + std::to_string(x.size()));
}

// Orthogonal projection of t onto the column space of b.
Eigen::VectorXd project(const Eigen::MatrixXd& b, const Eigen::VectorXd& t, double rel_tol)
{
    if (b.cols() == 0 || b.rows() == 0 || b.isZero(0.0))
        return Eigen::VectorXd::Zero(t.size());
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
    cod.setThreshold(rel_tol);
    cod.compute(b);
    return b * cod.solve(t);
}

} // namespace

std::vector<std::size_t> simplex_counts(const SimplicialComplex& c)
{
    std::vector<std::size_t> sizes;
    for (int n = 0; n <= c.max_dim(); ++n)
        sizes.push_back(c.count(n));
    return sizes;
}

InnerProductWeights InnerProductWeights::unit(const SimplicialComplex& c)
{
    return unit(simplex_counts(c));
}

InnerProductWeights InnerProductWeights::unit(const std::vector<std::size_t>& sizes)
{
    InnerProductWeights w;
    for (std::size_t n : sizes)
        w.per_dim_.emplace_back(n, 1.0);
    return w;
}

InnerProductWeights InnerProductWeights::from(std::vector<std::vector<double>> per_dim,
                                              const std::vector<std::size_t>& sizes)
{
    if (per_dim.size() > sizes.size())
        throw Error(ErrorCode::ShapeMismatch, "weights given for " + std::to_string(per_dim.size()) +
                                                  " dimensions, complex has " +
                                                  std::to_string(sizes.size()));
    per_dim.resize(sizes.size());
    for (std::size_t n = 0; n < sizes.size(); ++n) {
        if (per_dim[n].empty())
            per_dim[n].assign(sizes[n], 1.0);
        if (per_dim[n].size() != sizes[n])
            throw Error(ErrorCode::ShapeMismatch,
                        "weights for dimension " + std::to_string(n) + " have length " +
                            std::to_string(per_dim[n].size()) + ", expected " +
                            std::to_string(sizes[n]));
        for (double x : per_dim[n])
            if (!(x > 0.0) || !std::isfinite(x))
                throw Error(ErrorCode::Validation, "inner-product weights must be positive");
    }
    InnerProductWeights w;
    w.per_dim_ = std::move(per_dim);
    return w;
}

const std::vector<double>& InnerProductWeights::at(int n) const
{
    static const std::vector<double> empty;
    if (n < 0 || n >= dims())
        return empty;
    return per_dim_[static_cast<std::size_t>(n)];
}

bool InnerProductWeights::is_unit() const noexcept
{
    for (const auto& level : per_dim_)
        for (double x : level)
            if (x != 1.0)
                return false;
    return true;
}

double inner_product(const Cochain& x, const Cochain& y, std::span<const double> weights)
{
    if (x.dim != y.dim || x.size() != y.size() || x.size() != weights.size())
        throw Error(ErrorCode::ShapeMismatch, "inner product of mismatched cochains");
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        sum += weights[i] * x.values[i] * y.values[i];
    return sum;
}

double inner_product(const Cochain& x, const Cochain& y, const InnerProductWeights& w)
{
    return inner_product(x, y, w.at(x.dim));
}

double norm(const Cochain& x, const InnerProductWeights& w)
{
    return std::sqrt(std::max(0.0, inner_product(x, x, w)));
}

SparseMatrix adjoint_boundary(const SimplicialComplex& c, int n, const InnerProductWeights& w)
{
    SparseMatrix d = boundary_matrix(c, n, Field::Real);
    const auto& lower = weights_for(c, w, n - 1);
    const auto& upper = weights_for(c, w, n);
    return scale_rows_cols(mapped(upper, reciprocal), d.transposed(), lower);
}

SparseMatrix HodgeOperators::symmetrized() const
{
    if (weights.empty() || std::all_of(weights.begin(), weights.end(), [](double x) { return x == 1.0; }))
        return full;
    SparseMatrix s = scale_rows_cols(mapped(weights, root), full, mapped(weights, inverse_root));
    SparseMatrix sym = linear_combination(0.5, s, 0.5, s.transposed());
    sym.tag(dim, dim);
    return sym;
}

HodgeOperators hodge_laplacian(const SimplicialComplex& c, int n, const InnerProductWeights& w)
{
    require_dim(c, n);
    const auto& wn = weights_for(c, w, n);
    const std::vector<double> wn_inv = mapped(wn, reciprocal);

    SparseMatrix d_down = boundary_or_zero(c, n, Field::Real);
    SparseMatrix d_up = boundary_or_zero(c, n + 1, Field::Real);
    std::vector<double> w_lower = n >= 1 ? weights_for(c, w, n - 1) : std::vector<double>{};
    std::vector<double> w_upper = n + 1 <= c.max_dim() ? weights_for(c, w, n + 1) : std::vector<double>{};

    HodgeOperators ops;
    ops.dim = n;
    ops.weights = wn;
    ops.down_adjoint = scale_rows_cols(wn_inv, d_down.transposed(), w_lower);
    ops.up_adjoint = scale_rows_cols(mapped(w_upper, reciprocal), d_up.transposed(), wn);
    ops.down = compose(ops.down_adjoint, d_down);
    ops.up = compose(d_up, ops.up_adjoint);
    ops.full = add(ops.up, ops.down);
    ops.down.tag(n, n);
    ops.up.tag(n, n);
    ops.full.tag(n, n);
    return ops;
}

HodgeOperators hodge_laplacian(const SimplicialComplex& c, int n)
{
    return hodge_laplacian(c, n, InnerProductWeights::unit(c));
}

std::vector<Cochain> harmonic_basis(const HodgeOperators& ops, std::optional<double> tol)
{
    SpectralBasis basis = eigendecompose(ops.symmetrized());
    const double threshold = tol ? *tol : kHarmonicRelTol * basis.lambda_max();
    std::vector<double> unscale(ops.size(), 1.0);
    for (std::size_t i = 0; i < ops.weights.size() && i < unscale.size(); ++i)
        unscale[i] = 1.0 / std::sqrt(ops.weights[i]);

    std::vector<Cochain> out;
    for (Eigen::Index k = 0; k < basis.eigenvalues.size(); ++k) {
        if (basis.eigenvalues(k) > threshold)
            continue;
        Cochain h = Cochain::zeros(ops.dim, ops.size());
        for (std::size_t i = 0; i < ops.size(); ++i)
            h.values[i] = unscale[i] * basis.eigenvectors(static_cast<Eigen::Index>(i), k);
        out.push_back(std::move(h));
    }
    return out;
}

HodgeDecomposition hodge_decompose(const Cochain& s, const SimplicialComplex& c, int n,
                                   const InnerProductWeights& w, std::optional<double> tol)
{
    require_dim(c, n);
    require_cochain(c, s, n);
    if (s.field != Field::Real)
        throw Error(ErrorCode::FieldMismatch, "decomposition needs a real signal");
    const double rel_tol = tol ? *tol : kRelativeRankTol;
    const auto& wn = weights_for(c, w, n);

    Eigen::VectorXd root_w(static_cast<Eigen::Index>(wn.size()));
    for (std::size_t i = 0; i < wn.size(); ++i)
        root_w(static_cast<Eigen::Index>(i)) = std::sqrt(wn[i]);

    // Work in coordinates where the weighted inner product is the standard one.
    const Eigen::VectorXd t = root_w.cwiseProduct(to_eigen(s));
    const Eigen::MatrixXd gradients =
        root_w.cwiseInverse().asDiagonal() * boundary_or_zero(c, n, Field::Real).transposed().to_dense();
    const Eigen::MatrixXd curls = root_w.asDiagonal() * boundary_or_zero(c, n + 1, Field::Real).to_dense();

    const Eigen::VectorXd irrot = project(gradients, t, rel_tol).cwiseQuotient(root_w);
    const Eigen::VectorXd solenoid = project(curls, t, rel_tol).cwiseQuotient(root_w);
    const Eigen::VectorXd harmonic = to_eigen(s) - irrot - solenoid;
    return {from_eigen(n, irrot), from_eigen(n, harmonic), from_eigen(n, solenoid)};
}

HodgeDecomposition hodge_decompose(const Cochain& s, const SimplicialComplex& c, int n)
{
    return hodge_decompose(s, c, n, InnerProductWeights::unit(c));
}

Cochain gradient(const SimplicialComplex& c, const Cochain& f)
{
    require_cochain(c, f, 0);
    return apply(boundary_or_zero(c, 1, Field::Real).transposed(), f);
}

Cochain divergence(const SimplicialComplex& c, const Cochain& s)
{
    require_cochain(c, s, 1);
    return apply(boundary_or_zero(c, 1, Field::Real), s);
}

Cochain curl(const SimplicialComplex& c, const Cochain& s)
{
    require_cochain(c, s, 1);
    return apply(boundary_or_zero(c, 2, Field::Real).transposed(), s);
}

Cochain curl_adjoint(const SimplicialComplex& c, const Cochain& t)
{
    require_cochain(c, t, 2);
    return apply(boundary_or_zero(c, 2, Field::Real), t);
}

} // namespace hodgekit
