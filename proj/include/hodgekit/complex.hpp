#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace hodgekit {

class SparseMatrix;

using VertexId = std::uint64_t;

/// An abstract simplex: a strictly increasing list of vertex labels.
class Simplex {
public:
    Simplex() = default;

    /// Sorts the labels. Throws EmptySimplex or DuplicateVertex.
    explicit Simplex(std::vector<VertexId> vertices);
    Simplex(std::initializer_list<VertexId> vertices);

    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::span<const VertexId> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(const Simplex& other) const;

    /// The simplex with the i-th vertex removed. Requires dimension() >= 1.
    Simplex without(std::size_t i) const;

    auto operator<=>(const Simplex&) const = default;
    bool operator==(const Simplex&) const = default;

private:
    std::vector<VertexId> vertices_;
};

/// A face of a simplex together with the position of the vertex that was
/// deleted to obtain it. The induced orientation sign is (-1)^deleted.
struct Face {
    Simplex simplex;
    std::size_t deleted;

    int sign() const noexcept { return deleted % 2 == 0 ? 1 : -1; }
};

std::vector<Face> faces(const Simplex& s);

/// Closed-under-faces set of simplices with a canonical per-dimension order.
///
/// Simplices of each dimension are sorted lexicographically by their vertex
/// lists, and every matrix built on the complex indexes rows and columns in
/// that order. The complex is immutable once built.
class SimplicialComplex {
public:
    /// Downward closure of the given simplices.
    static SimplicialComplex build(const std::vector<std::vector<VertexId>>& top_simplices);

    int max_dim() const noexcept { return static_cast<int>(simplices_.size()) - 1; }

    /// Number of n-simplices; zero outside [0, max_dim].
    std::size_t count(int n) const noexcept;
    std::size_t total_count() const noexcept;

    const std::vector<Simplex>& simplices(int n) const;
    const Simplex& simplex(int n, std::size_t index) const { return simplices(n).at(index); }

    std::optional<std::size_t> find(const Simplex& s) const;
    std::size_t index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return find(s).has_value(); }

    std::vector<Simplex> cofaces(const Simplex& s) const;

    /// Canonical indices of the (n+1)-simplices that have the n-simplex at `index` as a face.
    const std::vector<std::size_t>& coface_indices(int n, std::size_t index) const;

    /// Faces of the n-simplex at `index` as (index among (n-1)-simplices, deleted position).
    struct FaceIndex {
        std::size_t index;
        std::size_t deleted;
    };
    const std::vector<FaceIndex>& face_indices(int n, std::size_t index) const;

    bool is_graph() const noexcept { return max_dim() <= 1; }

private:
    SimplicialComplex() = default;

    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::map<Simplex, std::size_t>> index_;
    std::vector<std::vector<std::vector<FaceIndex>>> faces_;
    std::vector<std::vector<std::vector<std::size_t>>> cofaces_;
};

SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& top_simplices);

/// All (dim+1)-simplices of `c` containing `s`. Throws UnknownSimplex.
std::vector<Simplex> cofaces(const SimplicialComplex& c, const Simplex& s);

/// Vertex adjacency, indexed by canonical vertex order.
SparseMatrix adjacency_matrix(const SimplicialComplex& c);

/// Diagonal vertex degree matrix, indexed by canonical vertex order.
SparseMatrix degree_matrix(const SimplicialComplex& c);

} // namespace hodgekit
