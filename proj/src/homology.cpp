#include "hodgekit/homology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "hodgekit/chains.hpp"
#include "hodgekit/error.hpp"

namespace hodgekit {

namespace {

void require_field(const SparseMatrix& m, Field field)
{
    if (m.field() != field)
        throw Error(ErrorCode::FieldMismatch, "expected a " + std::string(to_string(field)) +
                                                  " matrix, got " +
                                                  std::string(to_string(m.field())));
}

// Dense GF(2) matrix with rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix(const SparseMatrix& m)
        : rows_(m.rows()), cols_(m.cols()), words_((m.cols() + 63) / 64),
          bits_(rows_ * words_, 0)
    {
        for (const auto& e : m.entries())
            flip(e.row, e.col);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const
    {
        return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }

    void flip(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

    void add_row(std::size_t src, std::size_t dst)
    {
        for (std::size_t w = 0; w < words_; ++w)
            bits_[dst * words_ + w] ^= bits_[src * words_ + w];
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t w = 0; w < words_; ++w)
            std::swap(bits_[a * words_ + w], bits_[b * words_ + w]);
    }

    void add_col(std::size_t src, std::size_t dst)
    {
        for (std::size_t r = 0; r < rows_; ++r)
            if (get(r, src))
                flip(r, dst);
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        for (std::size_t r = 0; r < rows_; ++r)
            if (get(r, a) != get(r, b)) {
                flip(r, a);
                flip(r, b);
            }
    }

    SparseMatrix to_sparse() const
    {
        std::vector<Entry> entries;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c))
                    entries.push_back({r, c, 1.0});
        return SparseMatrix::from_triplets(rows_, cols_, Field::GF2, std::move(entries));
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

void replay(BitMatrix& m, const Gf2Op& op, bool rows)
{
    if (op.kind == Gf2Op::Kind::Swap)
        rows ? m.swap_rows(op.src, op.dst) : m.swap_cols(op.src, op.dst);
    else
        rows ? m.add_row(op.src, op.dst) : m.add_col(op.src, op.dst);
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace

RankProfile rank_gf2(const SparseMatrix& m)
{
    require_field(m, Field::GF2);
    BitMatrix bits(m);
    std::vector<char> used(m.rows(), 0);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t pivot = m.rows();
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!used[r] && bits.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot == m.rows())
            continue;
        used[pivot] = 1;
        ++rank;
        for (std::size_t r = pivot + 1; r < m.rows(); ++r)
            if (!used[r] && bits.get(r, c))
                bits.add_row(pivot, r);
    }
    return {rank, m.cols() - rank, m.cols()};
}

RankProfile rank_real(const SparseMatrix& m, std::optional<double> tol)
{
    require_field(m, Field::Real);
    const double threshold = tol ? *tol : kRelativeRankTol * m.max_abs();
    if (threshold <= 0.0 && tol)
        throw Error(ErrorCode::BadParams, "rank tolerance must be positive");

    Eigen::MatrixXd a = m.to_dense();
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    Eigen::Index rank = 0;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
        Eigen::Index pivot = rank;
        double best = std::abs(a(rank, c));
        for (Eigen::Index r = rank + 1; r < rows; ++r)
            if (std::abs(a(r, c)) > best) {
                best = std::abs(a(r, c));
                pivot = r;
            }
        if (best <= threshold || best == 0.0)
            continue;
        a.row(pivot).swap(a.row(rank));
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            double factor = a(r, c) / a(rank, c);
            if (factor != 0.0)
                a.row(r).tail(cols - c) -= factor * a.row(rank).tail(cols - c);
        }
        ++rank;
    }
    auto r = static_cast<std::size_t>(rank);
    return {r, m.cols() - r, m.cols()};
}

RankProfile rank(const SparseMatrix& m)
{
    return m.field() == Field::GF2 ? rank_gf2(m) : rank_real(m);
}

SmithNormalForm snf_gf2(const SparseMatrix& m)
{
    require_field(m, Field::GF2);
    BitMatrix bits(m);
    SmithNormalForm out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    auto record = [&](std::vector<Gf2Op>& log, Gf2Op op, bool is_row) {
        replay(bits, op, is_row);
        log.push_back(op);
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Pivot: lowest row >= t with a 1 in columns >= t, then its lowest such column.
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = t; r < rows && pr == rows; ++r)
            for (std::size_t c = t; c < cols; ++c)
                if (bits.get(r, c)) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == rows)
            break;
        if (pr != t)
            record(out.row_ops, {Gf2Op::Kind::Swap, pr, t}, true);
        if (pc != t)
            record(out.col_ops, {Gf2Op::Kind::Swap, pc, t}, false);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != t && bits.get(r, t))
                record(out.row_ops, {Gf2Op::Kind::Add, t, r}, true);
        for (std::size_t c = 0; c < cols; ++c)
            if (c != t && bits.get(t, c))
                record(out.col_ops, {Gf2Op::Kind::Add, t, c}, false);
        ++out.diag_count;
    }
    return out;
}

SparseMatrix replay_snf(const SparseMatrix& m, const SmithNormalForm& snf)
{
    require_field(m, Field::GF2);
    BitMatrix bits(m);
    for (const auto& op : snf.row_ops)
        replay(bits, op, true);
    for (const auto& op : snf.col_ops)
        replay(bits, op, false);
    return bits.to_sparse();
}

BettiVector betti(const SimplicialComplex& c, Field field, std::optional<double> real_tol)
{
    const int top = c.max_dim();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int n = 1; n <= top; ++n) {
        const SparseMatrix d = boundary_matrix(c, n, field);
        ranks[static_cast<std::size_t>(n)] = field == Field::GF2 ? rank_gf2(d).rank : rank_real(d, real_tol).rank;
    }

    BettiVector b(static_cast<std::size_t>(top) + 1, 0);
    for (int n = 0; n <= top; ++n) {
        auto i = static_cast<std::size_t>(n);
        b[i] = c.count(n) - ranks[i] - ranks[i + 1];
    }
    return b;
}

BettiVector betti_checked(const SimplicialComplex& c)
{
    BettiVector mod2 = betti(c, Field::GF2);
    BettiVector real = betti(c, Field::Real);
    if (mod2 != real) {
        std::string msg = "GF(2) and real Betti numbers disagree:";
        for (std::size_t n = 0; n < mod2.size(); ++n)
            msg += " b" + std::to_string(n) + "=" + std::to_string(mod2[n]) + "/" +
                   std::to_string(real[n]);
        throw Error(ErrorCode::Numerical, msg);
    }
    return mod2;
}

std::size_t connected_components(const SimplicialComplex& c)
{
    UnionFind uf(c.count(0));
    std::size_t components = c.count(0);
    for (std::size_t e = 0; e < c.count(1); ++e) {
        const auto& f = c.face_indices(1, e);
        if (uf.unite(f[0].index, f[1].index))
            --components;
    }
    return components;
}

} // namespace hodgekit
