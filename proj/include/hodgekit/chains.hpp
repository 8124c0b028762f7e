#pragma once

#include "hodgekit/complex.hpp"
#include "hodgekit/sparse_matrix.hpp"

namespace hodgekit {

/// Boundary map from n-chains to (n-1)-chains, shape #C_{n-1} x #C_n.
///
/// Each simplex is oriented by its ascending vertex order. Over the reals the
/// face obtained by deleting the i-th vertex enters with sign (-1)^i; over
/// GF(2) every face relation is a 1. Valid for 1 <= n <= max_dim.
SparseMatrix boundary_matrix(const SimplicialComplex& c, int n, Field field);

/// Coboundary from n-cochains to (n+1)-cochains: the transpose of the
/// (n+1)-boundary. For n == max_dim this is the 0 x #C_n map.
SparseMatrix coboundary_matrix(const SimplicialComplex& c, int n, Field field);

/// Boundary map extended by zero maps outside [1, max_dim]: ∂_0 maps to the
/// zero space and ∂_{max+1} comes from it.
SparseMatrix boundary_or_zero(const SimplicialComplex& c, int n, Field field);

} // namespace hodgekit
