#include <algorithm>
#include <random>

#include "catch_amalgamated.hpp"

#include "hodgekit/complex.hpp"
#include "hodgekit/error.hpp"
#include "hodgekit/sparse_matrix.hpp"
#include "support/fixtures.hpp"

using namespace hodgekit;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Validation;
}

} // namespace

TEST_CASE("build_complex closes a triangle downward", "[complex]")
{
    auto c = build_complex(fixtures::filled_triangle());
    CHECK(c.max_dim() == 2);
    CHECK(c.count(0) == 3);
    CHECK(c.count(1) == 3);
    CHECK(c.count(2) == 1);
    CHECK(c.total_count() == 7);
}

TEST_CASE("single vertex and hollow triangle", "[complex]")
{
    auto v = build_complex({{0}});
    CHECK(v.max_dim() == 0);
    CHECK(v.total_count() == 1);

    auto h = build_complex(fixtures::hollow_triangle());
    CHECK(h.count(0) == 3);
    CHECK(h.count(1) == 3);
    CHECK(h.count(2) == 0);
}

TEST_CASE("canonical order is lexicographic", "[complex]")
{
    auto c = build_complex(fixtures::filled_triangle());
    const auto& edges = c.simplices(1);
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == Simplex{0, 1});
    CHECK(edges[1] == Simplex{0, 2});
    CHECK(edges[2] == Simplex{1, 2});
}

TEST_CASE("labels need not be contiguous", "[complex]")
{
    auto c = build_complex({{10, 3}, {3, 42}});
    const auto& verts = c.simplices(0);
    REQUIRE(verts.size() == 3);
    CHECK(verts[0] == Simplex{3});
    CHECK(verts[1] == Simplex{10});
    CHECK(verts[2] == Simplex{42});
    CHECK(c.index_of(Simplex{3, 42}) == 1);
}

TEST_CASE("input errors", "[complex]")
{
    CHECK(code_of([] { build_complex({{0, 1}, {}}); }) == ErrorCode::EmptySimplex);
    CHECK(code_of([] { build_complex({{0, 1, 1}}); }) == ErrorCode::DuplicateVertex);
    CHECK(code_of([] { build_complex({}); }) == ErrorCode::EmptyComplex);
}

TEST_CASE("duplicate and redundant inputs are absorbed", "[complex]")
{
    auto a = build_complex({{0, 1, 2}});
    auto b = build_complex({{0, 1, 2}, {2, 1, 0}, {0, 1}, {2}});
    for (int n = 0; n <= 2; ++n)
        CHECK(a.simplices(n) == b.simplices(n));
}

TEST_CASE("faces delete one vertex each", "[complex]")
{
    auto f = faces(Simplex{0, 1, 2});
    REQUIRE(f.size() == 3);
    CHECK(f[0].simplex == Simplex{1, 2});
    CHECK(f[0].deleted == 0);

    auto e = faces(Simplex{0, 1});
    REQUIRE(e.size() == 2);
    CHECK(e[0].simplex == Simplex{1});
    CHECK(e[0].sign() == 1);
    CHECK(e[1].simplex == Simplex{0});
    CHECK(e[1].sign() == -1);

    CHECK(faces(Simplex{0, 1, 2, 3}).size() == 4);
    CHECK(code_of([] { faces(Simplex{7}); }) == ErrorCode::ZeroDimensional);
}

TEST_CASE("cofaces", "[complex]")
{
    auto hollow = build_complex(fixtures::hollow_triangle());
    CHECK(cofaces(hollow, Simplex{0, 1}).empty());

    auto filled = build_complex(fixtures::filled_triangle());
    auto cf = cofaces(filled, Simplex{0, 1});
    REQUIRE(cf.size() == 1);
    CHECK(cf[0] == Simplex{0, 1, 2});

    auto two = build_complex(fixtures::two_filled_triangles());
    CHECK(cofaces(two, Simplex{1, 2}).size() == 2);

    CHECK(code_of([&] { cofaces(hollow, Simplex{0, 5}); }) == ErrorCode::UnknownSimplex);
}

TEST_CASE("cofaces agree with brute-force superset enumeration", "[complex][property]")
{
    for (const auto& fixture : fixtures::corpus()) {
        auto c = build_complex(fixture.tops);
        for (int n = 0; n < c.max_dim(); ++n) {
            for (const auto& s : c.simplices(n)) {
                std::vector<Simplex> brute;
                for (const auto& t : c.simplices(n + 1))
                    if (t.contains(s))
                        brute.push_back(t);
                CHECK(c.cofaces(s) == brute);
                for (const auto& t : brute) {
                    auto f = faces(t);
                    CHECK(std::any_of(f.begin(), f.end(), [&](const Face& x) { return x.simplex == s; }));
                }
            }
        }
    }
}

TEST_CASE("closure and stable ordering under permuted input", "[complex][property]")
{
    std::mt19937_64 rng(5);
    for (const auto& fixture : fixtures::corpus()) {
        auto c = build_complex(fixture.tops);
        for (int n = 1; n <= c.max_dim(); ++n)
            for (const auto& s : c.simplices(n)) {
                CHECK(faces(s).size() == s.size());
                for (const auto& f : faces(s))
                    CHECK(c.contains(f.simplex));
            }

        auto shuffled = fixture.tops;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (auto& s : shuffled)
            std::shuffle(s.begin(), s.end(), rng);
        auto d = build_complex(shuffled);
        for (int n = 0; n <= c.max_dim(); ++n)
            CHECK(c.simplices(n) == d.simplices(n));
    }
}

TEST_CASE("adjacency matrix", "[complex]")
{
    // Triangle 0-1-2 with pendant 2-3.
    auto g = build_complex(fixtures::simple_graph());
    Eigen::MatrixXd expected(4, 4);
    expected << 0, 1, 1, 0,
                1, 0, 1, 0,
                1, 1, 0, 1,
                0, 0, 1, 0;
    CHECK(adjacency_matrix(g).to_dense() == expected);

    auto isolated = build_complex({{0}, {1}, {2}});
    CHECK(adjacency_matrix(isolated).is_zero());
    CHECK(adjacency_matrix(isolated).rows() == 3);

    auto tri = build_complex(fixtures::hollow_triangle());
    Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(3, 3) - Eigen::MatrixXd::Identity(3, 3);
    CHECK(adjacency_matrix(tri).to_dense() == ones);
}

TEST_CASE("degree matrix", "[complex]")
{
    auto tri = build_complex(fixtures::hollow_triangle());
    CHECK(degree_matrix(tri).to_dense() == Eigen::Vector3d(2, 2, 2).asDiagonal().toDenseMatrix());

    auto single = build_complex({{0}});
    CHECK(degree_matrix(single).to_dense() == Eigen::MatrixXd::Zero(1, 1));

    // Star: count incident edges per vertex.
    auto star = build_complex(fixtures::star3());
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(4);
    for (const auto& e : star.simplices(1))
        for (auto v : e.vertices())
            counts(static_cast<Eigen::Index>(star.index_of(Simplex{v}))) += 1;
    CHECK(degree_matrix(star).to_dense() == Eigen::MatrixXd(counts.asDiagonal()));
    CHECK(counts == Eigen::Vector4d(3, 1, 1, 1));
}
