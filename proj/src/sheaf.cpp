#include "hodgekit/sheaf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hodgekit/error.hpp"
#include "hodgekit/homology.hpp"

namespace hodgekit {

namespace {

std::string label(const Simplex& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
}

std::string pair_label(const Simplex& face, const Simplex& coface)
{
    return label(face) + " -> " + label(coface);
}

void require_dim(const SimplicialComplex& c, int n)
{
    if (n < 0 || n > c.max_dim())
        throw Error(ErrorCode::DimensionOutOfRange,
                    "dimension " + std::to_string(n) + " outside [0, " +
                        std::to_string(c.max_dim()) + "]");
}

std::vector<double> reciprocals(const std::vector<double>& w)
{
    std::vector<double> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = 1.0 / w[i];
    return out;
}

} // namespace

Sheaf Sheaf::build(const SimplicialComplex& c, const std::map<Simplex, std::size_t>& stalks,
                   const std::vector<RestrictionMap>& restrictions, double commute_tol)
{
    Sheaf sh;
    for (const auto& [s, k] : stalks) {
        if (!c.contains(s))
            throw Error(ErrorCode::UnknownSimplex, "stalk given for " + label(s) + ", which is not in the complex");
        sh.stalks_.emplace(s, k);
    }
    for (int n = 0; n <= c.max_dim(); ++n)
        for (const auto& s : c.simplices(n))
            if (!sh.stalks_.contains(s))
                throw Error(ErrorCode::Validation, "no stalk for " + label(s));

    for (const auto& r : restrictions) {
        if (!c.contains(r.face) || !c.contains(r.coface))
            throw Error(ErrorCode::UnknownSimplex, "restriction " + pair_label(r.face, r.coface) +
                                                       " refers to a simplex outside the complex");
        if (r.coface.dimension() != r.face.dimension() + 1 || !r.coface.contains(r.face))
            throw Error(ErrorCode::Validation,
                        "restriction " + pair_label(r.face, r.coface) + " is not a face/coface pair");
        const auto rows = static_cast<Eigen::Index>(sh.stalks_.at(r.coface));
        const auto cols = static_cast<Eigen::Index>(sh.stalks_.at(r.face));
        if (r.matrix.rows() != rows || r.matrix.cols() != cols)
            throw Error(ErrorCode::ShapeMismatch,
                        "restriction " + pair_label(r.face, r.coface) + " is " +
                            std::to_string(r.matrix.rows()) + "x" + std::to_string(r.matrix.cols()) +
                            ", stalks need " + std::to_string(rows) + "x" + std::to_string(cols));
        if (!r.matrix.allFinite())
            throw Error(ErrorCode::Validation, "restriction " + pair_label(r.face, r.coface) + " is not finite");
        if (!sh.maps_.emplace(std::make_pair(r.face, r.coface), r.matrix).second)
            throw Error(ErrorCode::Validation, "duplicate restriction " + pair_label(r.face, r.coface));
    }

    for (int n = 1; n <= c.max_dim(); ++n) {
        for (const auto& tau : c.simplices(n)) {
            for (const auto& f : faces(tau)) {
                const auto key = std::make_pair(f.simplex, tau);
                if (sh.maps_.contains(key))
                    continue;
                const std::size_t rows = sh.stalks_.at(tau);
                const std::size_t cols = sh.stalks_.at(f.simplex);
                if (rows != 0 && cols != 0)
                    throw Error(ErrorCode::MissingRestriction, "no restriction " + pair_label(f.simplex, tau));
                sh.maps_.emplace(key, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows),
                                                            static_cast<Eigen::Index>(cols)));
            }
        }
    }

    // Each codimension-2 pair σ ⊂ τ is reached through exactly two intermediate faces.
    for (int n = 2; n <= c.max_dim(); ++n) {
        for (const auto& tau : c.simplices(n)) {
            for (std::size_t i = 0; i < tau.size(); ++i) {
                for (std::size_t j = i + 1; j < tau.size(); ++j) {
                    const Simplex via_i = tau.without(i);
                    const Simplex via_j = tau.without(j);
                    const Simplex sigma = via_i.without(j - 1);
                    const Eigen::MatrixXd a = sh.restriction(via_i, tau) * sh.restriction(sigma, via_i);
                    const Eigen::MatrixXd b = sh.restriction(via_j, tau) * sh.restriction(sigma, via_j);
                    if (a.size() > 0 && (a - b).cwiseAbs().maxCoeff() > commute_tol)
                        throw Error(ErrorCode::NonCommutingRestrictions,
                                    "restrictions from " + label(sigma) + " to " + label(tau) +
                                        " differ between the routes through " + label(via_i) +
                                        " and " + label(via_j));
                }
            }
        }
    }
    return sh;
}

Sheaf Sheaf::constant(const SimplicialComplex& c, std::size_t k)
{
    std::map<Simplex, std::size_t> stalks;
    std::vector<RestrictionMap> maps;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(k),
                                                         static_cast<Eigen::Index>(k));
    for (int n = 0; n <= c.max_dim(); ++n) {
        for (const auto& s : c.simplices(n)) {
            stalks.emplace(s, k);
            if (n >= 1)
                for (const auto& f : faces(s))
                    maps.push_back({f.simplex, s, id});
        }
    }
    return build(c, stalks, maps);
}

std::size_t Sheaf::stalk_dim(const Simplex& s) const
{
    auto it = stalks_.find(s);
    if (it == stalks_.end())
        throw Error(ErrorCode::UnknownSimplex, "no stalk for " + label(s));
    return it->second;
}

const Eigen::MatrixXd& Sheaf::restriction(const Simplex& face, const Simplex& coface) const
{
    auto it = maps_.find(std::make_pair(face, coface));
    if (it == maps_.end())
        throw Error(ErrorCode::MissingRestriction, "no restriction " + pair_label(face, coface));
    return it->second;
}

std::size_t Sheaf::total_dim(const SimplicialComplex& c, int n) const
{
    return offsets(c, n).back();
}

std::vector<std::size_t> Sheaf::offsets(const SimplicialComplex& c, int n) const
{
    std::vector<std::size_t> out{0};
    for (const auto& s : c.simplices(n))
        out.push_back(out.back() + stalk_dim(s));
    return out;
}

SparseMatrix sheaf_coboundary(const SimplicialComplex& c, const Sheaf& sh, int n)
{
    if (n < -1 || n > c.max_dim())
        throw Error(ErrorCode::DimensionOutOfRange,
                    "sheaf coboundary dimension " + std::to_string(n) + " outside [-1, " +
                        std::to_string(c.max_dim()) + "]");
    const auto col_offsets = sh.offsets(c, n);
    const auto row_offsets = sh.offsets(c, n + 1);

    std::vector<Entry> entries;
    for (std::size_t j = 0; n + 1 <= c.max_dim() && j < c.count(n + 1); ++j) {
        const Simplex& tau = c.simplex(n + 1, j);
        for (const auto& f : c.face_indices(n + 1, j)) {
            const Simplex& sigma = c.simplex(n, f.index);
            const Eigen::MatrixXd& block = sh.restriction(sigma, tau);
            const double sign = f.deleted % 2 == 0 ? 1.0 : -1.0;
            for (Eigen::Index r = 0; r < block.rows(); ++r)
                for (Eigen::Index k = 0; k < block.cols(); ++k)
                    if (block(r, k) != 0.0)
                        entries.push_back({row_offsets[j] + static_cast<std::size_t>(r),
                                           col_offsets[f.index] + static_cast<std::size_t>(k),
                                           sign * block(r, k)});
        }
    }
    SparseMatrix d = SparseMatrix::from_triplets(row_offsets.back(), col_offsets.back(), Field::Real,
                                                 std::move(entries));
    d.tag(n, n + 1);
    return d;
}

ConsistencyResult check_consistency(const SimplicialComplex& c, const Sheaf& sh, const Assignment& x,
                                    double tol)
{
    require_dim(c, x.dim);
    if (x.values.size() != sh.total_dim(c, x.dim))
        throw Error(ErrorCode::ShapeMismatch,
                    "assignment has length " + std::to_string(x.values.size()) + ", stalks need " +
                        std::to_string(sh.total_dim(c, x.dim)));
    const SparseMatrix d = sheaf_coboundary(c, sh, x.dim);
    Cochain r = apply(d, Cochain{x.dim, Field::Real, x.values});
    double worst = 0.0;
    for (double v : r.values)
        worst = std::max(worst, std::abs(v));
    return {worst <= tol, Assignment{x.dim + 1, std::move(r.values)}};
}

std::vector<std::size_t> sheaf_cohomology_dims(const SimplicialComplex& c, const Sheaf& sh,
                                               std::optional<double> tol)
{
    std::vector<std::size_t> dims;
    std::size_t previous_rank = rank_real(sheaf_coboundary(c, sh, -1), tol).rank;
    for (int n = 0; n <= c.max_dim(); ++n) {
        const RankProfile current = rank_real(sheaf_coboundary(c, sh, n), tol);
        dims.push_back(current.nullity - previous_rank);
        previous_rank = current.rank;
    }
    return dims;
}

std::vector<std::size_t> stalk_sizes(const SimplicialComplex& c, const Sheaf& sh)
{
    std::vector<std::size_t> sizes;
    for (int n = 0; n <= c.max_dim(); ++n)
        sizes.push_back(sh.total_dim(c, n));
    return sizes;
}

HodgeOperators sheaf_laplacian(const SimplicialComplex& c, const Sheaf& sh, int n,
                               const InnerProductWeights& w)
{
    require_dim(c, n);
    const auto sizes = stalk_sizes(c, sh);
    auto weights = [&](int k) -> std::vector<double> {
        if (k < 0 || k > c.max_dim())
            return {};
        const auto& wk = w.at(k);
        if (wk.size() != sizes[static_cast<std::size_t>(k)])
            throw Error(ErrorCode::ShapeMismatch, "stalk weights for dimension " + std::to_string(k) +
                                                      " have length " + std::to_string(wk.size()));
        return wk;
    };
    const std::vector<double> w_lower = weights(n - 1);
    const std::vector<double> w_mid = weights(n);
    const std::vector<double> w_upper = weights(n + 1);

    const SparseMatrix d_up = sheaf_coboundary(c, sh, n);
    const SparseMatrix d_down = sheaf_coboundary(c, sh, n - 1);

    HodgeOperators ops;
    ops.dim = n;
    ops.weights = w_mid;
    ops.up_adjoint = scale_rows_cols(reciprocals(w_mid), d_up.transposed(), w_upper);
    ops.down_adjoint = scale_rows_cols(reciprocals(w_lower), d_down.transposed(), w_mid);
    ops.up = compose(ops.up_adjoint, d_up);
    ops.down = compose(d_down, ops.down_adjoint);
    ops.full = add(ops.up, ops.down);
    ops.up.tag(n, n);
    ops.down.tag(n, n);
    ops.full.tag(n, n);
    return ops;
}

HodgeOperators sheaf_laplacian(const SimplicialComplex& c, const Sheaf& sh, int n)
{
    return sheaf_laplacian(c, sh, n, InnerProductWeights::unit(stalk_sizes(c, sh)));
}

} // namespace hodgekit
