#include "hodgekit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hodgekit/error.hpp"
#include "hodgekit/homology.hpp"

namespace hodgekit {

namespace {

// Flip each column so that its largest-magnitude entry is positive.
void normalize_signs(Eigen::MatrixXd& vectors)
{
    for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
        auto col = vectors.col(k);
        const double largest = col.cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < col.size(); ++i) {
            if (std::abs(col(i)) >= largest * (1.0 - 1e-9)) {
                if (col(i) < 0.0)
                    col = -col;
                break;
            }
        }
    }
}

std::vector<double> nonzero_eigenvalues(const SpectralBasis& b, double zero_tol, std::size_t& zeros)
{
    std::vector<double> out;
    zeros = 0;
    for (Eigen::Index k = 0; k < b.eigenvalues.size(); ++k) {
        if (b.eigenvalues(k) <= zero_tol)
            ++zeros;
        else
            out.push_back(b.eigenvalues(k));
    }
    return out;
}

} // namespace

double SpectralBasis::lambda_max() const noexcept
{
    return eigenvalues.size() == 0 ? 0.0 : std::max(0.0, eigenvalues.maxCoeff());
}

SpectralBasis eigendecompose(const SparseMatrix& L, std::optional<double> symmetry_tol)
{
    if (L.field() != Field::Real)
        throw Error(ErrorCode::FieldMismatch, "eigendecomposition needs a real matrix");
    if (L.rows() != L.cols())
        throw Error(ErrorCode::ShapeMismatch, "eigendecomposition needs a square matrix");

    const Eigen::MatrixXd dense = L.to_dense();
    const double scale = L.max_abs();
    const double asym = dense.size() == 0 ? 0.0 : (dense - dense.transpose()).cwiseAbs().maxCoeff();
    if (asym > symmetry_tol.value_or(kSymmetryRelTol) * scale)
        throw Error(ErrorCode::NotSymmetric,
                    "asymmetry " + std::to_string(asym) + " relative to max entry " + std::to_string(scale));

    SpectralBasis basis;
    basis.dim = L.domain_dim() >= 0 ? L.domain_dim() : 0;
    if (dense.rows() == 0) {
        basis.eigenvalues.resize(0);
        basis.eigenvectors.resize(0, 0);
        return basis;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::Numerical, "symmetric eigensolver did not converge");
    basis.eigenvalues = solver.eigenvalues();
    basis.eigenvectors = solver.eigenvectors();
    normalize_signs(basis.eigenvectors);
    return basis;
}

SpectralBasis spectral_basis(const HodgeOperators& ops)
{
    SpectralBasis basis = eigendecompose(ops.symmetrized());
    basis.dim = ops.dim;
    return basis;
}

Cochain sft(const Cochain& x, const SpectralBasis& basis)
{
    if (x.dim != basis.dim || x.size() != basis.size())
        throw Error(ErrorCode::ShapeMismatch, "signal does not match the spectral basis");
    return from_eigen(x.dim, basis.eigenvectors.transpose() * to_eigen(x));
}

Cochain inverse_sft(const Cochain& xhat, const SpectralBasis& basis)
{
    if (xhat.dim != basis.dim || xhat.size() != basis.size())
        throw Error(ErrorCode::ShapeMismatch, "coefficients do not match the spectral basis");
    return from_eigen(xhat.dim, basis.eigenvectors * to_eigen(xhat));
}

SpectraReport compare_spectra(const SimplicialComplex& c, std::optional<double> tol)
{
    if (!c.is_graph())
        throw Error(ErrorCode::NotAGraph,
                    "complex has dimension " + std::to_string(c.max_dim()));

    const SpectralBasis s0 = spectral_basis(hodge_laplacian(c, 0));
    SpectralBasis s1;
    if (c.max_dim() >= 1)
        s1 = spectral_basis(hodge_laplacian(c, 1));

    const double lambda_max = std::max(s0.lambda_max(), s1.lambda_max());
    const double zero_tol = kHarmonicRelTol * lambda_max;
    const double match_tol = tol.value_or(kSpectrumMatchRelTol) * lambda_max;

    SpectraReport report;
    report.nonzero_l0 = nonzero_eigenvalues(s0, zero_tol, report.zero_mult_l0);
    report.nonzero_l1 = nonzero_eigenvalues(s1, zero_tol, report.zero_mult_l1);

    report.agree = report.nonzero_l0.size() == report.nonzero_l1.size();
    for (std::size_t i = 0; report.agree && i < report.nonzero_l0.size(); ++i)
        report.agree = std::abs(report.nonzero_l0[i] - report.nonzero_l1[i]) <= match_tol;

    report.zero_mult_diff = static_cast<long>(report.zero_mult_l0) - static_cast<long>(report.zero_mult_l1);
    const BettiVector b = betti(c, Field::GF2);
    const long b1 = b.size() > 1 ? static_cast<long>(b[1]) : 0;
    report.b0_minus_b1 = static_cast<long>(b[0]) - b1;
    return report;
}

} // namespace hodgekit
