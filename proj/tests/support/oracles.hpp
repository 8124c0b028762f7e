#pragma once

// Reference computations that share no code path with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <Eigen/Dense>

namespace oracles {

/// GF(2) rank as log2 of the number of distinct vectors in the row span,
/// enumerated over all 2^rows subsets. Rows are given as bitmasks.
inline std::size_t gf2_rank_by_span(const std::vector<std::uint32_t>& rows)
{
    std::set<std::uint32_t> span;
    const std::uint64_t subsets = std::uint64_t{1} << rows.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::uint32_t v = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (mask >> i & 1u)
                v ^= rows[i];
        span.insert(v);
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < span.size())
        ++rank;
    return rank;
}

struct Fraction {
    long long num = 0;
    long long den = 1;

    static Fraction make(long long n, long long d)
    {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g == 0)
            g = 1;
        return {n / g, d / g};
    }
    Fraction operator-(const Fraction& o) const { return make(num * o.den - o.num * den, den * o.den); }
    Fraction operator*(const Fraction& o) const { return make(num * o.num, den * o.den); }
    Fraction operator/(const Fraction& o) const { return make(num * o.den, den * o.num); }
    bool is_zero() const { return num == 0; }
};

/// Exact rank of an integer matrix by fraction-valued elimination.
inline std::size_t exact_rank(const Eigen::MatrixXd& m)
{
    const auto rows = static_cast<std::size_t>(m.rows());
    const auto cols = static_cast<std::size_t>(m.cols());
    std::vector<std::vector<Fraction>> a(rows, std::vector<Fraction>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a[r][c] = Fraction::make(static_cast<long long>(std::llround(m(long(r), long(c)))), 1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c].is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c].is_zero())
                continue;
            Fraction f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                a[r][k] = a[r][k] - f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a)
{
    const Eigen::Index n = a.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q)
                off += a(p, q) * a(p, q);
        if (off < 1e-30)
            break;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300)
                    continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> out;
    for (Eigen::Index i = 0; i < n; ++i)
        out.push_back(a(i, i));
    std::sort(out.begin(), out.end());
    return out;
}

/// Laplacian spectrum of the n-cycle: 2 - 2 cos(2πk/n), ascending.
inline std::vector<double> cycle_spectrum(std::size_t n)
{
    const double pi = std::acos(-1.0);
    std::vector<double> out;
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(2.0 - 2.0 * std::cos(2.0 * pi * static_cast<double>(k) / static_cast<double>(n)));
    std::sort(out.begin(), out.end());
    return out;
}

/// Connected components by repeated breadth-first search over an edge list.
inline std::size_t components_by_search(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    std::vector<std::vector<std::size_t>> adj(vertices);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(vertices, 0);
    std::size_t count = 0;
    for (std::size_t s = 0; s < vertices; ++s) {
        if (seen[s])
            continue;
        ++count;
        std::vector<std::size_t> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            std::size_t v = queue.back();
            queue.pop_back();
            for (std::size_t w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
    }
    return count;
}

/// Projector onto the column span of v (orthonormal columns assumed).
inline Eigen::MatrixXd projector(const Eigen::MatrixXd& v)
{
    return v * v.transpose();
}

} // namespace oracles
