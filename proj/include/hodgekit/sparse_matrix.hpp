#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace hodgekit {

enum class Field { GF2, Real };

std::string_view to_string(Field f);

/// Real entries with magnitude at or below this are dropped at construction.
inline constexpr double kZeroEntry = 1e-12;

struct Entry {
    std::size_t row;
    std::size_t col;
    double value;
};

/// Immutable triplet matrix over GF(2) or the reals.
///
/// Entries are kept sorted row-major with no duplicates and no explicit
/// zeros; GF(2) entries are exactly 1. A matrix may optionally be tagged with
/// the chain dimensions of its domain and codomain, which `apply` checks
/// against the cochain it is given. Untagged dimensions are -1.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols, Field field);

    /// Duplicate coordinates are summed (xor for GF(2)). GF(2) values must be 0 or 1.
    static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, Field field,
                                      std::vector<Entry> entries);
    static SparseMatrix from_dense(const Eigen::MatrixXd& dense, Field field);
    static SparseMatrix identity(std::size_t n, Field field);
    static SparseMatrix diagonal(const std::vector<double>& diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Field field() const noexcept { return field_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::size_t nnz() const noexcept { return entries_.size(); }

    /// Entries of row r as a contiguous range into entries().
    std::span<const Entry> row(std::size_t r) const;

    double at(std::size_t r, std::size_t c) const;
    double max_abs() const noexcept;
    bool is_zero() const noexcept { return entries_.empty(); }

    SparseMatrix transposed() const;
    Eigen::MatrixXd to_dense() const;

    int domain_dim() const noexcept { return domain_dim_; }
    int codomain_dim() const noexcept { return codomain_dim_; }
    SparseMatrix& tag(int domain, int codomain) noexcept
    {
        domain_dim_ = domain;
        codomain_dim_ = codomain;
        return *this;
    }

    bool operator==(const SparseMatrix& other) const;

private:
    void build_row_offsets();

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_ = Field::Real;
    std::vector<Entry> entries_;
    std::vector<std::size_t> row_offsets_;
    int domain_dim_ = -1;
    int codomain_dim_ = -1;
};

/// Values aligned to the canonical order of the n-simplices.
struct Cochain {
    int dim = 0;
    Field field = Field::Real;
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    static Cochain zeros(int dim, std::size_t n, Field field = Field::Real)
    {
        return Cochain{dim, field, std::vector<double>(n, 0.0)};
    }
};

SparseMatrix transpose(const SparseMatrix& m);

/// Matrix-vector product; GF(2) accumulates by xor.
Cochain apply(const SparseMatrix& m, const Cochain& x);

/// Matrix product in the common field.
SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b);

/// alpha * a + beta * b (Real only).
SparseMatrix linear_combination(double alpha, const SparseMatrix& a, double beta,
                                const SparseMatrix& b);

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix scale(const SparseMatrix& m, double factor);

/// diag(left) * m * diag(right).
SparseMatrix scale_rows_cols(const std::vector<double>& left, const SparseMatrix& m,
                             const std::vector<double>& right);

Eigen::VectorXd to_eigen(const Cochain& x);
Cochain from_eigen(int dim, const Eigen::VectorXd& v);

} // namespace hodgekit
