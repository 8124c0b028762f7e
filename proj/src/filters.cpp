#include "hodgekit/filters.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

#include "hodgekit/error.hpp"

namespace hodgekit {

namespace {

// sum_{j>=1} coeffs[j-1] L^j = L (c_1 I + L (c_2 I + ... ))
SparseMatrix polynomial_branch(const std::vector<double>& coeffs, const SparseMatrix& L)
{
    const std::size_t n = L.rows();
    SparseMatrix acc(n, n, Field::Real);
    const SparseMatrix id = SparseMatrix::identity(n, Field::Real);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = compose(L, linear_combination(1.0, acc, *it, id));
    return acc;
}

} // namespace

SparseMatrix build_filter(const FilterSpec& spec, const HodgeOperators& ops)
{
    if (spec.dim != ops.dim)
        throw Error(ErrorCode::ShapeMismatch, "filter for dimension " + std::to_string(spec.dim) +
                                                  " applied to Laplacian of dimension " +
                                                  std::to_string(ops.dim));
    if (spec.down.size() > kMaxFilterDegree || spec.up.size() > kMaxFilterDegree)
        throw Error(ErrorCode::BadParams, "filter degree above " + std::to_string(kMaxFilterDegree));
    auto finite = [](double x) { return std::isfinite(x); };
    if (!finite(spec.alpha0) || !std::all_of(spec.down.begin(), spec.down.end(), finite) ||
        !std::all_of(spec.up.begin(), spec.up.end(), finite))
        throw Error(ErrorCode::BadParams, "filter coefficients must be finite");

    const std::size_t n = ops.size();
    SparseMatrix H = linear_combination(spec.alpha0, SparseMatrix::identity(n, Field::Real), 1.0,
                                        polynomial_branch(spec.down, ops.down));
    H = add(H, polynomial_branch(spec.up, ops.up));
    H.tag(ops.dim, ops.dim);
    if (H.max_abs() > kFilterMagnitudeWarning)
        std::clog << "warning: filter entries reach " << H.max_abs()
                  << "; high powers of the Laplacian may lose precision\n";
    return H;
}

Cochain apply_filter(const SparseMatrix& H, const Cochain& s)
{
    return apply(H, s);
}

Cochain shift(const HodgeOperators& ops, const Cochain& s, int d)
{
    if (d < 1)
        throw Error(ErrorCode::BadParams, "shift count must be positive");
    Cochain out = s;
    for (int i = 0; i < d; ++i)
        out = apply(ops.full, out);
    return out;
}

} // namespace hodgekit
