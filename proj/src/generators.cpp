#include "hodgekit/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "hodgekit/error.hpp"

namespace hodgekit {

namespace {

// Distributions from <random> are implementation-defined; these keep the
// generated bytes identical across standard libraries.
double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

TopSimplices sorted(std::set<std::vector<VertexId>> simplices)
{
    return TopSimplices(simplices.begin(), simplices.end());
}

} // namespace

TopSimplices cycle_graph(std::size_t n)
{
    if (n < 3)
        throw Error(ErrorCode::BadParams, "a cycle needs at least 3 vertices");
    std::set<std::vector<VertexId>> edges;
    for (VertexId i = 0; i < n; ++i) {
        VertexId j = (i + 1) % n;
        edges.insert({std::min(i, j), std::max(i, j)});
    }
    return sorted(std::move(edges));
}

TopSimplices path_graph(std::size_t n)
{
    if (n < 1)
        throw Error(ErrorCode::BadParams, "a path needs at least 1 vertex");
    if (n == 1)
        return {{0}};
    TopSimplices out;
    for (VertexId i = 0; i + 1 < n; ++i)
        out.push_back({i, i + 1});
    return out;
}

TopSimplices octahedron_sphere()
{
    // Poles 0 and 5 over the equator 1-2-3-4.
    return sorted({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4},
                   {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}});
}

TopSimplices torus7()
{
    std::set<std::vector<VertexId>> triangles;
    for (VertexId i = 0; i < 7; ++i) {
        std::vector<VertexId> a{i, (i + 1) % 7, (i + 3) % 7};
        std::vector<VertexId> b{i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        triangles.insert(a);
        triangles.insert(b);
    }
    return sorted(std::move(triangles));
}

TopSimplices random_graph(std::size_t n, double p, std::uint64_t seed)
{
    if (n < 1)
        throw Error(ErrorCode::BadParams, "a random graph needs at least 1 vertex");
    if (!(p >= 0.0 && p <= 1.0))
        throw Error(ErrorCode::BadParams, "edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    TopSimplices out;
    std::vector<char> touched(n, 0);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (uniform01(rng) < p) {
                out.push_back({i, j});
                touched[i] = touched[j] = 1;
            }
    for (VertexId v = 0; v < n; ++v)
        if (!touched[v])
            out.push_back({v});
    return out;
}

TopSimplices crosslinked_cycle(std::size_t n, std::size_t k, std::uint64_t seed)
{
    TopSimplices cycle = cycle_graph(n);
    std::set<std::vector<VertexId>> edges(cycle.begin(), cycle.end());

    std::vector<std::vector<VertexId>> candidates;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (!edges.contains({i, j}))
                candidates.push_back({i, j});
    if (k > candidates.size())
        throw Error(ErrorCode::BadParams, "only " + std::to_string(candidates.size()) +
                                              " chords fit into a " + std::to_string(n) + "-cycle");

    std::mt19937_64 rng(seed);
    // Partial Fisher-Yates: the first k slots become the chosen chords.
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t pick = i + uniform_below(rng, candidates.size() - i);
        std::swap(candidates[i], candidates[pick]);
        edges.insert(candidates[i]);
    }
    return sorted(std::move(edges));
}

TopSimplices random_complex(std::size_t vertices, int max_dim, std::size_t count, std::uint64_t seed)
{
    if (vertices < 1 || max_dim < 0 || count < 1 || static_cast<std::size_t>(max_dim) >= vertices)
        throw Error(ErrorCode::BadParams, "random complex needs 0 <= max_dim < vertices and count >= 1");
    std::mt19937_64 rng(seed);
    std::set<std::vector<VertexId>> out;
    std::vector<VertexId> labels(vertices);
    for (std::size_t i = 0; i < vertices; ++i)
        labels[i] = i;
    for (std::size_t s = 0; s < count; ++s) {
        const std::size_t size = 1 + uniform_below(rng, static_cast<std::uint64_t>(max_dim) + 1);
        for (std::size_t i = 0; i < size; ++i)
            std::swap(labels[i], labels[i + uniform_below(rng, vertices - i)]);
        std::vector<VertexId> simplex(labels.begin(), labels.begin() + static_cast<long>(size));
        std::sort(simplex.begin(), simplex.end());
        out.insert(std::move(simplex));
    }
    return sorted(std::move(out));
}

} // namespace hodgekit
