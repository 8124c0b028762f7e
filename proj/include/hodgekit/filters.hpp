#pragma once

#include <vector>

#include "hodgekit/hodge.hpp"
#include "hodgekit/sparse_matrix.hpp"

namespace hodgekit {

/// H = alpha0 I + sum_j down[j-1] (L^down)^j + sum_k up[k-1] (L^up)^k.
struct FilterSpec {
    int dim = 0;
    double alpha0 = 0.0;
    std::vector<double> down;
    std::vector<double> up;
};

inline constexpr std::size_t kMaxFilterDegree = 64;
inline constexpr double kFilterMagnitudeWarning = 1e12;

/// Evaluates both polynomial branches by Horner's rule. Throws BadParams for
/// degrees above kMaxFilterDegree or non-finite coefficients, and warns on
/// std::clog when the result exceeds kFilterMagnitudeWarning in magnitude.
SparseMatrix build_filter(const FilterSpec& spec, const HodgeOperators& ops);

Cochain apply_filter(const SparseMatrix& H, const Cochain& s);

/// L^d s, computed as d successive applications of L.
Cochain shift(const HodgeOperators& ops, const Cochain& s, int d);

} // namespace hodgekit
