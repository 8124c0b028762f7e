#include "hodgekit/chains.hpp"

#include <string>

#include "hodgekit/error.hpp"

namespace hodgekit {

SparseMatrix boundary_matrix(const SimplicialComplex& c, int n, Field field)
{
    if (n < 1 || n > c.max_dim())
        throw Error(ErrorCode::DimensionOutOfRange,
                    "boundary dimension " + std::to_string(n) + " outside [1, " +
                        std::to_string(c.max_dim()) + "]");
    std::vector<Entry> entries;
    entries.reserve(c.count(n) * static_cast<std::size_t>(n + 1));
    for (std::size_t j = 0; j < c.count(n); ++j) {
        for (const auto& f : c.face_indices(n, j)) {
            double value = 1.0;
            if (field == Field::Real && f.deleted % 2 == 1)
                value = -1.0;
            entries.push_back({f.index, j, value});
        }
    }
    SparseMatrix m = SparseMatrix::from_triplets(c.count(n - 1), c.count(n), field, std::move(entries));
    m.tag(n, n - 1);
    return m;
}

SparseMatrix coboundary_matrix(const SimplicialComplex& c, int n, Field field)
{
    if (n < 0 || n > c.max_dim())
        throw Error(ErrorCode::DimensionOutOfRange,
                    "coboundary dimension " + std::to_string(n) + " outside [0, " +
                        std::to_string(c.max_dim()) + "]");
    if (n == c.max_dim()) {
        SparseMatrix empty(0, c.count(n), field);
        empty.tag(n, n + 1);
        return empty;
    }
    return boundary_matrix(c, n + 1, field).transposed();
}

SparseMatrix boundary_or_zero(const SimplicialComplex& c, int n, Field field)
{
    if (n >= 1 && n <= c.max_dim())
        return boundary_matrix(c, n, field);
    SparseMatrix zero(c.count(n - 1), c.count(n), field);
    zero.tag(n, n - 1);
    return zero;
}

} // namespace hodgekit
