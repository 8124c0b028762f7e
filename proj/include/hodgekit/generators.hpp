#pragma once

#include <cstdint>
#include <vector>

#include "hodgekit/complex.hpp"

namespace hodgekit {

using TopSimplices = std::vector<std::vector<VertexId>>;

// Fixture complexes. All generators are deterministic for a given seed and
// produce canonically sorted simplex lists.

/// Cycle graph on n >= 3 vertices.
TopSimplices cycle_graph(std::size_t n);
/// Path graph on n >= 1 vertices.
TopSimplices path_graph(std::size_t n);
/// Boundary of the octahedron: a triangulated 2-sphere on 6 vertices.
TopSimplices octahedron_sphere();
/// Minimal 7-vertex triangulation of the torus (14 triangles, 21 edges).
TopSimplices torus7();
/// G(n, p) random graph; isolated vertices are emitted as 0-simplices.
TopSimplices random_graph(std::size_t n, double p, std::uint64_t seed);
/// n-cycle with k extra chords chosen uniformly among the non-edges.
TopSimplices crosslinked_cycle(std::size_t n, std::size_t k, std::uint64_t seed);
/// `count` random simplices of dimension up to `max_dim` on `vertices` labels.
TopSimplices random_complex(std::size_t vertices, int max_dim, std::size_t count, std::uint64_t seed);

} // namespace hodgekit
