#include "hodgekit/complex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hodgekit/error.hpp"
#include "hodgekit/sparse_matrix.hpp"

namespace hodgekit {

namespace {

std::string describe(std::span<const VertexId> vertices)
{
    std::string out = "[";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(vertices[i]);
    }
    return out + "]";
}

} // namespace

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.empty())
        throw Error(ErrorCode::EmptySimplex, "a simplex needs at least one vertex");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw Error(ErrorCode::DuplicateVertex, "repeated vertex in " + describe(vertices_));
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices))
{
}

bool Simplex::contains(const Simplex& other) const
{
    return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                         other.vertices_.end());
}

Simplex Simplex::without(std::size_t i) const
{
    if (dimension() < 1)
        throw Error(ErrorCode::ZeroDimensional, "a vertex has no faces");
    Simplex out;
    out.vertices_.reserve(vertices_.size() - 1);
    for (std::size_t k = 0; k < vertices_.size(); ++k)
        if (k != i)
            out.vertices_.push_back(vertices_[k]);
    return out;
}

std::vector<Face> faces(const Simplex& s)
{
    if (s.dimension() < 1)
        throw Error(ErrorCode::ZeroDimensional, "a vertex has no faces");
    std::vector<Face> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        out.push_back(Face{s.without(i), i});
    return out;
}

SimplicialComplex SimplicialComplex::build(const std::vector<std::vector<VertexId>>& top_simplices)
{
    if (top_simplices.empty())
        throw Error(ErrorCode::EmptyComplex, "no simplices given");

    std::vector<std::set<Simplex>> levels;
    for (const auto& raw : top_simplices) {
        Simplex s(raw);
        auto n = static_cast<std::size_t>(s.dimension());
        if (levels.size() <= n)
            levels.resize(n + 1);
        levels[n].insert(std::move(s));
    }
    for (std::size_t n = levels.size() - 1; n >= 1; --n)
        for (const auto& s : levels[n])
            for (std::size_t i = 0; i < s.size(); ++i)
                levels[n - 1].insert(s.without(i));

    SimplicialComplex c;
    const std::size_t dims = levels.size();
    c.simplices_.resize(dims);
    c.index_.resize(dims);
    c.faces_.resize(dims);
    c.cofaces_.resize(dims);
    for (std::size_t n = 0; n < dims; ++n) {
        c.simplices_[n].assign(levels[n].begin(), levels[n].end());
        for (std::size_t j = 0; j < c.simplices_[n].size(); ++j)
            c.index_[n].emplace(c.simplices_[n][j], j);
        c.faces_[n].resize(c.simplices_[n].size());
        c.cofaces_[n].resize(c.simplices_[n].size());
    }
    for (std::size_t n = 1; n < dims; ++n) {
        for (std::size_t j = 0; j < c.simplices_[n].size(); ++j) {
            const Simplex& s = c.simplices_[n][j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::size_t f = c.index_[n - 1].at(s.without(i));
                c.faces_[n][j].push_back(FaceIndex{f, i});
                c.cofaces_[n - 1][f].push_back(j);
            }
        }
    }
    return c;
}

std::size_t SimplicialComplex::count(int n) const noexcept
{
    if (n < 0 || n > max_dim())
        return 0;
    return simplices_[static_cast<std::size_t>(n)].size();
}

std::size_t SimplicialComplex::total_count() const noexcept
{
    std::size_t total = 0;
    for (const auto& level : simplices_)
        total += level.size();
    return total;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int n) const
{
    static const std::vector<Simplex> empty;
    if (n < 0 || n > max_dim())
        return empty;
    return simplices_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const
{
    int n = s.dimension();
    if (n < 0 || n > max_dim())
        return std::nullopt;
    const auto& level = index_[static_cast<std::size_t>(n)];
    auto it = level.find(s);
    if (it == level.end())
        return std::nullopt;
    return it->second;
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const
{
    auto found = find(s);
    if (!found)
        throw Error(ErrorCode::UnknownSimplex, describe(s.vertices()) + " is not in the complex");
    return *found;
}

const std::vector<std::size_t>& SimplicialComplex::coface_indices(int n, std::size_t index) const
{
    if (n < 0 || n > max_dim())
        throw Error(ErrorCode::DimensionOutOfRange, "dimension " + std::to_string(n));
    return cofaces_[static_cast<std::size_t>(n)].at(index);
}

const std::vector<SimplicialComplex::FaceIndex>&
SimplicialComplex::face_indices(int n, std::size_t index) const
{
    if (n < 0 || n > max_dim())
        throw Error(ErrorCode::DimensionOutOfRange, "dimension " + std::to_string(n));
    return faces_[static_cast<std::size_t>(n)].at(index);
}

std::vector<Simplex> SimplicialComplex::cofaces(const Simplex& s) const
{
    std::size_t j = index_of(s);
    int n = s.dimension();
    std::vector<Simplex> out;
    if (n + 1 > max_dim())
        return out;
    for (std::size_t k : cofaces_[static_cast<std::size_t>(n)][j])
        out.push_back(simplices_[static_cast<std::size_t>(n + 1)][k]);
    return out;
}

SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& top_simplices)
{
    return SimplicialComplex::build(top_simplices);
}

std::vector<Simplex> cofaces(const SimplicialComplex& c, const Simplex& s)
{
    return c.cofaces(s);
}

SparseMatrix adjacency_matrix(const SimplicialComplex& c)
{
    const std::size_t nv = c.count(0);
    std::vector<Entry> entries;
    for (std::size_t e = 0; e < c.count(1); ++e) {
        const auto& f = c.face_indices(1, e);
        entries.push_back({f[0].index, f[1].index, 1.0});
        entries.push_back({f[1].index, f[0].index, 1.0});
    }
    return SparseMatrix::from_triplets(nv, nv, Field::Real, std::move(entries)).tag(0, 0);
}

SparseMatrix degree_matrix(const SimplicialComplex& c)
{
    std::vector<double> degree(c.count(0), 0.0);
    for (std::size_t v = 0; v < c.count(0); ++v)
        degree[v] = c.max_dim() >= 1 ? static_cast<double>(c.coface_indices(0, v).size()) : 0.0;
    return SparseMatrix::diagonal(degree).tag(0, 0);
}

} // namespace hodgekit
