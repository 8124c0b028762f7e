#include "catch_amalgamated.hpp"

#include "hodgekit/chains.hpp"
#include "hodgekit/error.hpp"
#include "hodgekit/generators.hpp"
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

Eigen::MatrixXd mat(std::initializer_list<std::initializer_list<double>> rows)
{
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index r = 0;
    for (const auto& row : rows) {
        Eigen::Index c = 0;
        for (double v : row)
            m(r, c++) = v;
        ++r;
    }
    return m;
}

} // namespace

TEST_CASE("GF(2) boundary matrices of the filled triangle", "[chains]")
{
    auto c = build_complex(fixtures::filled_triangle());
    // Columns {0,1}, {0,2}, {1,2}: a column permutation of the textbook
    // display ordered e0={0,1}, e1={1,2}, e2={0,2}.
    CHECK(boundary_matrix(c, 1, Field::GF2).to_dense() == mat({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
    Eigen::MatrixXd textbook = mat({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}});
    Eigen::MatrixXd permuted(3, 3);
    permuted << textbook.col(0), textbook.col(2), textbook.col(1);
    CHECK(boundary_matrix(c, 1, Field::GF2).to_dense() == permuted);

    CHECK(boundary_matrix(c, 2, Field::GF2).to_dense() == mat({{1}, {1}, {1}}));
}

TEST_CASE("oriented boundary signs", "[chains]")
{
    auto c = build_complex(fixtures::filled_triangle());
    // ∂{0,1} = {1} - {0}; ∂{0,1,2} = {1,2} - {0,2} + {0,1}.
    CHECK(boundary_matrix(c, 1, Field::Real).to_dense() == mat({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}}));
    CHECK(boundary_matrix(c, 2, Field::Real).to_dense() == mat({{1}, {-1}, {1}}));
}

TEST_CASE("path graph products", "[chains]")
{
    auto c = build_complex(fixtures::path4());
    SparseMatrix d = boundary_matrix(c, 1, Field::Real);
    REQUIRE(d.rows() == 4);
    REQUIRE(d.cols() == 3);
    CHECK(compose(transpose(d), d).to_dense() == mat({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
    CHECK(compose(d, transpose(d)).to_dense() ==
          mat({{1, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 1}}));
}

TEST_CASE("coboundary is the transpose of the next boundary", "[chains]")
{
    auto c = build_complex(fixtures::filled_triangle());
    CHECK(coboundary_matrix(c, 0, Field::GF2) == transpose(boundary_matrix(c, 1, Field::GF2)));
    CHECK(coboundary_matrix(c, 1, Field::GF2).to_dense() == mat({{1, 1, 1}}));

    auto top = coboundary_matrix(c, 2, Field::Real);
    CHECK(top.rows() == 0);
    CHECK(top.cols() == 1);

    auto hollow = build_complex(fixtures::hollow_triangle());
    auto empty = coboundary_matrix(hollow, 1, Field::Real);
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 3);
}

TEST_CASE("dimension errors", "[chains]")
{
    auto c = build_complex(fixtures::hollow_triangle());
    CHECK(code_of([&] { boundary_matrix(c, 0, Field::GF2); }) == ErrorCode::DimensionOutOfRange);
    CHECK(code_of([&] { boundary_matrix(c, 2, Field::GF2); }) == ErrorCode::DimensionOutOfRange);
    CHECK(code_of([&] { coboundary_matrix(c, 2, Field::GF2); }) == ErrorCode::DimensionOutOfRange);
}

TEST_CASE("boundary of the cycle of all edges vanishes", "[chains]")
{
    auto c = build_complex(fixtures::hollow_triangle());
    Cochain all{1, Field::GF2, {1, 1, 1}};
    CHECK(apply(boundary_matrix(c, 1, Field::GF2), all).values == std::vector<double>{0, 0, 0});

    // Oriented cycle 0->1->2->0 is {0,1} + {1,2} - {0,2} in canonical orientation.
    Cochain loop{1, Field::Real, {1, -1, 1}};
    CHECK(apply(boundary_matrix(c, 1, Field::Real), loop).values == std::vector<double>{0, 0, 0});
}

TEST_CASE("apply: identity and errors", "[chains]")
{
    auto id = SparseMatrix::identity(3, Field::Real);
    Cochain x{0, Field::Real, {1.5, -2, 3}};
    CHECK(apply(id, x).values == x.values);

    auto c = build_complex(fixtures::hollow_triangle());
    auto d = boundary_matrix(c, 1, Field::Real);
    CHECK(code_of([&] { apply(d, Cochain{1, Field::Real, {1, 2}}); }) == ErrorCode::ShapeMismatch);
    CHECK(code_of([&] { apply(d, Cochain{1, Field::GF2, {1, 0, 1}}); }) == ErrorCode::FieldMismatch);
    CHECK(code_of([&] { apply(d, Cochain{0, Field::Real, {1, 0, 1}}); }) == ErrorCode::ShapeMismatch);
    auto g = boundary_matrix(c, 1, Field::GF2);
    CHECK(code_of([&] { compose(d, transpose(g)); }) == ErrorCode::FieldMismatch);
    auto p = boundary_matrix(build_complex(fixtures::path4()), 1, Field::Real);
    CHECK(code_of([&] { compose(p, p); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("triplet construction merges duplicates and drops zeros", "[chains]")
{
    auto m = SparseMatrix::from_triplets(2, 2, Field::Real, {{0, 0, 1.0}, {0, 0, -1.0}, {1, 1, 2.0}, {1, 1, 1e-13}});
    CHECK(m.nnz() == 1);
    CHECK(m.at(1, 1) == Catch::Approx(2.0));
    auto g = SparseMatrix::from_triplets(2, 2, Field::GF2, {{0, 1, 1}, {0, 1, 1}, {1, 0, 1}});
    CHECK(g.nnz() == 1);
    CHECK(g.at(1, 0) == 1.0);
    CHECK(code_of([] { SparseMatrix::from_triplets(2, 2, Field::GF2, {{0, 0, 2.0}}); }) == ErrorCode::Validation);
    CHECK(code_of([] { SparseMatrix::from_triplets(2, 2, Field::Real, {{2, 0, 1.0}}); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("fundamental lemma and column structure on random complexes", "[chains][property]")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto c = build_complex(random_complex(8, 3, 10, seed));
        for (int n = 1; n <= c.max_dim(); ++n) {
            for (Field f : {Field::GF2, Field::Real}) {
                auto d = boundary_matrix(c, n, f);
                if (n + 1 <= c.max_dim())
                    CHECK(compose(d, boundary_matrix(c, n + 1, f)).is_zero());
                CHECK(transpose(transpose(d)) == d);
                if (n < c.max_dim())
                    CHECK(coboundary_matrix(c, n, f) == transpose(boundary_matrix(c, n + 1, f)));
            }
            Eigen::MatrixXd dense = boundary_matrix(c, n, Field::Real).to_dense();
            for (Eigen::Index j = 0; j < dense.cols(); ++j) {
                const Simplex& s = c.simplex(n, static_cast<std::size_t>(j));
                int nonzeros = 0;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    double expected = i % 2 == 0 ? 1.0 : -1.0;
                    CHECK(dense(static_cast<Eigen::Index>(c.index_of(s.without(i))), j) == expected);
                    ++nonzeros;
                }
                CHECK((dense.col(j).array() != 0.0).count() == nonzeros);
                CHECK(nonzeros == n + 1);
            }
        }
    }
}
