#include "hodgekit/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hodgekit/error.hpp"

namespace hodgekit {

namespace {

std::string shape(std::size_t r, std::size_t c)
{
    return std::to_string(r) + "x" + std::to_string(c);
}

void require_same_field(Field a, Field b)
{
    if (a != b)
        throw Error(ErrorCode::FieldMismatch,
                    std::string(to_string(a)) + " vs " + std::string(to_string(b)));
}

} // namespace

std::string_view to_string(Field f)
{
    return f == Field::GF2 ? "gf2" : "real";
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field)
{
    build_row_offsets();
}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, Field field,
                                         std::vector<Entry> entries)
{
    for (const auto& e : entries) {
        if (e.row >= rows || e.col >= cols)
            throw Error(ErrorCode::ShapeMismatch, "entry (" + std::to_string(e.row) + "," +
                                                      std::to_string(e.col) + ") outside " +
                                                      shape(rows, cols));
        if (!std::isfinite(e.value))
            throw Error(ErrorCode::Validation, "non-finite matrix entry");
        if (field == Field::GF2 && e.value != 0.0 && e.value != 1.0)
            throw Error(ErrorCode::Validation, "GF(2) entries must be 0 or 1");
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix m(rows, cols, field);
    m.entries_.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        double sum = 0.0;
        for (; j < entries.size() && entries[j].row == entries[i].row &&
               entries[j].col == entries[i].col;
             ++j) {
            if (field == Field::GF2)
                sum = (sum != entries[j].value) ? 1.0 : 0.0;
            else
                sum += entries[j].value;
        }
        if (std::abs(sum) > kZeroEntry)
            m.entries_.push_back({entries[i].row, entries[i].col, sum});
        i = j;
    }
    m.build_row_offsets();
    return m;
}

SparseMatrix SparseMatrix::from_dense(const Eigen::MatrixXd& dense, Field field)
{
    std::vector<Entry> entries;
    for (Eigen::Index r = 0; r < dense.rows(); ++r)
        for (Eigen::Index c = 0; c < dense.cols(); ++c)
            if (dense(r, c) != 0.0)
                entries.push_back(
                    {static_cast<std::size_t>(r), static_cast<std::size_t>(c), dense(r, c)});
    return from_triplets(static_cast<std::size_t>(dense.rows()),
                         static_cast<std::size_t>(dense.cols()), field, std::move(entries));
}

SparseMatrix SparseMatrix::identity(std::size_t n, Field field)
{
    std::vector<Entry> entries;
    entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        entries.push_back({i, i, 1.0});
    return from_triplets(n, n, field, std::move(entries));
}

SparseMatrix SparseMatrix::diagonal(const std::vector<double>& diag)
{
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < diag.size(); ++i)
        entries.push_back({i, i, diag[i]});
    return from_triplets(diag.size(), diag.size(), Field::Real, std::move(entries));
}

void SparseMatrix::build_row_offsets()
{
    row_offsets_.assign(rows_ + 1, 0);
    for (const auto& e : entries_)
        ++row_offsets_[e.row + 1];
    for (std::size_t r = 0; r < rows_; ++r)
        row_offsets_[r + 1] += row_offsets_[r];
}

std::span<const Entry> SparseMatrix::row(std::size_t r) const
{
    return std::span<const Entry>(entries_).subspan(row_offsets_.at(r),
                                                    row_offsets_[r + 1] - row_offsets_[r]);
}

double SparseMatrix::at(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
        throw Error(ErrorCode::ShapeMismatch, "index outside " + shape(rows_, cols_));
    auto entries = row(r);
    auto it = std::lower_bound(entries.begin(), entries.end(), c,
                               [](const Entry& e, std::size_t col) { return e.col < col; });
    return (it != entries.end() && it->col == c) ? it->value : 0.0;
}

double SparseMatrix::max_abs() const noexcept
{
    double out = 0.0;
    for (const auto& e : entries_)
        out = std::max(out, std::abs(e.value));
    return out;
}

SparseMatrix SparseMatrix::transposed() const
{
    std::vector<Entry> flipped;
    flipped.reserve(entries_.size());
    for (const auto& e : entries_)
        flipped.push_back({e.col, e.row, e.value});
    SparseMatrix t = from_triplets(cols_, rows_, field_, std::move(flipped));
    t.tag(codomain_dim_, domain_dim_);
    return t;
}

Eigen::MatrixXd SparseMatrix::to_dense() const
{
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows_),
                                                static_cast<Eigen::Index>(cols_));
    for (const auto& e : entries_)
        out(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = e.value;
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_ || field_ != other.field_ ||
        entries_.size() != other.entries_.size())
        return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& a = entries_[i];
        const auto& b = other.entries_[i];
        if (a.row != b.row || a.col != b.col || a.value != b.value)
            return false;
    }
    return true;
}

SparseMatrix transpose(const SparseMatrix& m)
{
    return m.transposed();
}

Cochain apply(const SparseMatrix& m, const Cochain& x)
{
    require_same_field(m.field(), x.field);
    if (m.cols() != x.size())
        throw Error(ErrorCode::ShapeMismatch, "matrix " + shape(m.rows(), m.cols()) +
                                                  " applied to vector of length " +
                                                  std::to_string(x.size()));
    if (m.domain_dim() >= 0 && m.domain_dim() != x.dim)
        throw Error(ErrorCode::ShapeMismatch, "matrix acts on dimension " +
                                                  std::to_string(m.domain_dim()) +
                                                  ", cochain has dimension " +
                                                  std::to_string(x.dim));
    Cochain y = Cochain::zeros(m.codomain_dim() >= 0 ? m.codomain_dim() : x.dim, m.rows(),
                               m.field());
    if (m.field() == Field::GF2) {
        for (const auto& e : m.entries())
            if (x.values[e.col] != 0.0)
                y.values[e.row] = y.values[e.row] != 0.0 ? 0.0 : 1.0;
    } else {
        for (const auto& e : m.entries())
            y.values[e.row] += e.value * x.values[e.col];
    }
    return y;
}

SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b)
{
    require_same_field(a.field(), b.field());
    if (a.cols() != b.rows())
        throw Error(ErrorCode::ShapeMismatch,
                    shape(a.rows(), a.cols()) + " times " + shape(b.rows(), b.cols()));

    std::vector<Entry> product;
    std::vector<double> accum(b.cols(), 0.0);
    std::vector<char> touched(b.cols(), 0);
    std::vector<std::size_t> cols_hit;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        cols_hit.clear();
        for (const auto& ea : a.row(r)) {
            for (const auto& eb : b.row(ea.col)) {
                if (!touched[eb.col]) {
                    touched[eb.col] = 1;
                    cols_hit.push_back(eb.col);
                }
                if (a.field() == Field::GF2)
                    accum[eb.col] = accum[eb.col] != 0.0 ? 0.0 : 1.0;
                else
                    accum[eb.col] += ea.value * eb.value;
            }
        }
        for (std::size_t c : cols_hit) {
            product.push_back({r, c, accum[c]});
            accum[c] = 0.0;
            touched[c] = 0;
        }
    }
    SparseMatrix out = SparseMatrix::from_triplets(a.rows(), b.cols(), a.field(), std::move(product));
    out.tag(b.domain_dim(), a.codomain_dim());
    return out;
}

SparseMatrix linear_combination(double alpha, const SparseMatrix& a, double beta,
                                const SparseMatrix& b)
{
    require_same_field(a.field(), b.field());
    if (a.field() != Field::Real)
        throw Error(ErrorCode::FieldMismatch, "linear combinations need real matrices");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::ShapeMismatch,
                    shape(a.rows(), a.cols()) + " plus " + shape(b.rows(), b.cols()));
    std::vector<Entry> entries;
    entries.reserve(a.nnz() + b.nnz());
    for (const auto& e : a.entries())
        entries.push_back({e.row, e.col, alpha * e.value});
    for (const auto& e : b.entries())
        entries.push_back({e.row, e.col, beta * e.value});
    SparseMatrix out = SparseMatrix::from_triplets(a.rows(), a.cols(), Field::Real, std::move(entries));
    out.tag(a.domain_dim(), a.codomain_dim());
    return out;
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.field() == Field::GF2 && b.field() == Field::GF2) {
        if (a.rows() != b.rows() || a.cols() != b.cols())
            throw Error(ErrorCode::ShapeMismatch,
                        shape(a.rows(), a.cols()) + " plus " + shape(b.rows(), b.cols()));
        std::vector<Entry> entries(a.entries());
        entries.insert(entries.end(), b.entries().begin(), b.entries().end());
        SparseMatrix out = SparseMatrix::from_triplets(a.rows(), a.cols(), Field::GF2, std::move(entries));
        out.tag(a.domain_dim(), a.codomain_dim());
        return out;
    }
    return linear_combination(1.0, a, 1.0, b);
}

SparseMatrix scale(const SparseMatrix& m, double factor)
{
    if (m.field() != Field::Real)
        throw Error(ErrorCode::FieldMismatch, "scaling needs a real matrix");
    return linear_combination(factor, m, 0.0, SparseMatrix(m.rows(), m.cols(), Field::Real));
}

SparseMatrix scale_rows_cols(const std::vector<double>& left, const SparseMatrix& m,
                             const std::vector<double>& right)
{
    if (m.field() != Field::Real)
        throw Error(ErrorCode::FieldMismatch, "scaling needs a real matrix");
    if (left.size() != m.rows() || right.size() != m.cols())
        throw Error(ErrorCode::ShapeMismatch, "diagonal scaling of " + shape(m.rows(), m.cols()));
    std::vector<Entry> entries;
    entries.reserve(m.nnz());
    for (const auto& e : m.entries())
        entries.push_back({e.row, e.col, left[e.row] * e.value * right[e.col]});
    SparseMatrix out = SparseMatrix::from_triplets(m.rows(), m.cols(), Field::Real, std::move(entries));
    out.tag(m.domain_dim(), m.codomain_dim());
    return out;
}

Eigen::VectorXd to_eigen(const Cochain& x)
{
    return Eigen::Map<const Eigen::VectorXd>(x.values.data(), static_cast<Eigen::Index>(x.size()));
}

Cochain from_eigen(int dim, const Eigen::VectorXd& v)
{
    return Cochain{dim, Field::Real, std::vector<double>(v.data(), v.data() + v.size())};
}

} // namespace hodgekit
