#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hodgekit/complex.hpp"
#include "hodgekit/generators.hpp"

namespace fixtures {

using hodgekit::TopSimplices;

inline TopSimplices hollow_triangle() { return {{0, 1}, {1, 2}, {0, 2}}; }
inline TopSimplices filled_triangle() { return {{0, 1, 2}}; }
inline TopSimplices filled_tetrahedron() { return {{0, 1, 2, 3}}; }
inline TopSimplices tetrahedron_boundary() { return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}; }
inline TopSimplices path4() { return {{0, 1}, {1, 2}, {2, 3}}; }
inline TopSimplices star3() { return {{0, 1}, {0, 2}, {0, 3}}; }
inline TopSimplices two_disjoint_triangles() { return {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}; }
inline TopSimplices two_filled_triangles() { return {{0, 1, 2}, {1, 2, 3}}; }
// 4-vertex graph: a triangle 0-1-2 with a pendant edge 2-3.
inline TopSimplices simple_graph() { return {{0, 1}, {1, 2}, {0, 2}, {2, 3}}; }
// Hollow square with one filled triangle on the diagonal and a dangling edge.
inline TopSimplices mixed() { return {{0, 1, 2}, {2, 3}, {0, 3}, {3, 4}, {5}}; }

struct Named {
    std::string name;
    TopSimplices tops;
};

/// The complexes every corpus-wide property runs over.
inline std::vector<Named> corpus()
{
    return {
        {"vertex", {{0}}},
        {"hollow_triangle", hollow_triangle()},
        {"filled_triangle", filled_triangle()},
        {"filled_tetrahedron", filled_tetrahedron()},
        {"tetrahedron_boundary", tetrahedron_boundary()},
        {"path4", path4()},
        {"star3", star3()},
        {"two_disjoint_triangles", two_disjoint_triangles()},
        {"two_filled_triangles", two_filled_triangles()},
        {"simple_graph", simple_graph()},
        {"mixed", mixed()},
        {"octahedron", hodgekit::octahedron_sphere()},
        {"torus", hodgekit::torus7()},
        {"cycle8", hodgekit::cycle_graph(8)},
        {"crosslinked16", hodgekit::crosslinked_cycle(16, 3, 11)},
    };
}

} // namespace fixtures
