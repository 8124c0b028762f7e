#include <random>

#include "catch_amalgamated.hpp"

#include "hodgekit/error.hpp"
#include "hodgekit/filters.hpp"
#include "hodgekit/generators.hpp"
#include "hodgekit/spectral.hpp"
#include "support/fixtures.hpp"

using namespace hodgekit;

namespace {

Cochain random_cochain(int dim, std::size_t n, std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    Cochain x = Cochain::zeros(dim, n);
    for (double& v : x.values)
        v = g(rng);
    return x;
}

FilterSpec random_filter(int dim, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FilterSpec f{dim, u(rng), {}, {}};
    f.down.resize(rng() % 4);
    f.up.resize(rng() % 4);
    for (double& a : f.down)
        a = u(rng);
    for (double& b : f.up)
        b = u(rng);
    return f;
}

double dist(const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return (a - b).norm(); }

double scale(const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return std::max({1.0, a.norm(), b.norm()}); }

} // namespace

TEST_CASE("simple filters", "[filters]")
{
    auto c = build_complex(fixtures::two_filled_triangles());
    auto ops = hodge_laplacian(c, 1);
    CHECK(build_filter({1, 1.0, {}, {}}, ops) == SparseMatrix::identity(ops.size(), Field::Real));
    CHECK(build_filter({1, 0.0, {1.0}, {1.0}}, ops).to_dense() == ops.full.to_dense());
    CHECK(build_filter({1, 0.0, {0.0, 1.0}, {}}, ops).to_dense() == compose(ops.down, ops.down).to_dense());
    Eigen::MatrixXd up3 = ops.up.to_dense() * ops.up.to_dense() * ops.up.to_dense();
    CHECK((build_filter({1, 0.0, {}, {0.0, 0.0, 2.0}}, ops).to_dense() - 2.0 * up3).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("filter parameter errors", "[filters]")
{
    auto ops = hodge_laplacian(build_complex(fixtures::hollow_triangle()), 1);
    FilterSpec big{1, 0.0, std::vector<double>(65, 0.0), {}};
    CHECK_THROWS_AS(build_filter(big, ops), Error);
    FilterSpec ok{1, 0.0, std::vector<double>(64, 0.0), {}};
    CHECK_NOTHROW(build_filter(ok, ops));
    CHECK_THROWS_AS(build_filter({1, std::nan(""), {}, {}}, ops), Error);
    CHECK_THROWS_AS(shift(ops, Cochain::zeros(1, 3), 0), Error);
}

TEST_CASE("filtering signals", "[filters]")
{
    auto c = build_complex(torus7());
    auto ops = hodge_laplacian(c, 1);
    std::mt19937_64 rng(4);
    Cochain s = random_cochain(1, c.count(1), rng);
    CHECK(apply_filter(SparseMatrix::identity(ops.size(), Field::Real), s).values == s.values);

    auto harmonic = harmonic_basis(ops);
    REQUIRE(harmonic.size() == 2);
    for (int trial = 0; trial < 10; ++trial) {
        FilterSpec f = random_filter(1, rng);
        f.alpha0 = 0.0;
        auto out = to_eigen(apply_filter(build_filter(f, ops), harmonic[0]));
        CHECK(out.cwiseAbs().maxCoeff() < 1e-9);
    }

    auto basis = spectral_basis(ops);
    auto L = build_filter({1, 0.0, {1.0}, {1.0}}, ops);
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(basis.size()); ++k) {
        Cochain u = from_eigen(1, basis.eigenvectors.col(k));
        auto out = to_eigen(apply_filter(L, u));
        CHECK(dist(out, basis.eigenvalues(k) * basis.eigenvectors.col(k)) < 1e-9);
    }
}

TEST_CASE("shift", "[filters]")
{
    auto c = build_complex(fixtures::mixed());
    std::mt19937_64 rng(6);
    for (int n = 0; n <= c.max_dim(); ++n) {
        auto ops = hodge_laplacian(c, n);
        Cochain s = random_cochain(n, c.count(n), rng);
        CHECK(shift(ops, s, 1).values == apply(ops.full, s).values);
        for (int d = 2; d <= 5; ++d) {
            auto direct = to_eigen(shift(ops, s, d));
            auto stepped = to_eigen(shift(ops, shift(ops, s, d - 1), 1));
            CHECK(dist(direct, stepped) <= 1e-10 * scale(direct, stepped));
        }
        for (const auto& h : harmonic_basis(ops))
            CHECK(to_eigen(shift(ops, h, 3)).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("filter algebra", "[filters][property]")
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (const auto& [name, tops] : fixtures::corpus()) {
        INFO(name);
        auto c = build_complex(tops);
        for (int n = 0; n <= c.max_dim(); ++n) {
            auto ops = hodge_laplacian(c, n);
            auto H1 = build_filter(random_filter(n, rng), ops);
            auto H2 = build_filter(random_filter(n, rng), ops);
            Cochain s1 = random_cochain(n, c.count(n), rng), s2 = random_cochain(n, c.count(n), rng);
            double a = u(rng), b = u(rng);

            Eigen::VectorXd lhs = to_eigen(apply_filter(H1, from_eigen(n, a * to_eigen(s1) + b * to_eigen(s2))));
            Eigen::VectorXd rhs = a * to_eigen(apply_filter(H1, s1)) + b * to_eigen(apply_filter(H1, s2));
            CHECK(dist(lhs, rhs) <= 1e-10 * scale(lhs, rhs));

            Eigen::VectorXd lh = to_eigen(apply(ops.full, apply_filter(H1, s1)));
            Eigen::VectorXd hl = to_eigen(apply_filter(H1, apply(ops.full, s1)));
            CHECK(dist(lh, hl) <= 1e-9 * scale(lh, hl));

            Eigen::MatrixXd h12 = compose(H1, H2).to_dense(), h21 = compose(H2, H1).to_dense();
            double norm = std::max(1.0, h12.cwiseAbs().maxCoeff());
            CHECK((h12 - h21).cwiseAbs().maxCoeff() <= 1e-9 * norm);

            CHECK(compose(ops.up, ops.down).to_dense().cwiseAbs().maxCoeff() <= 1e-10);
            CHECK(compose(ops.down, ops.up).to_dense().cwiseAbs().maxCoeff() <= 1e-10);
        }
    }
}

TEST_CASE("single-polynomial filters are diagonal in the eigenbasis", "[filters][property]")
{
    std::mt19937_64 rng(19);
    for (const auto& [name, tops] : fixtures::corpus()) {
        INFO(name);
        auto c = build_complex(tops);
        for (int n = 0; n <= c.max_dim(); ++n) {
            auto ops = hodge_laplacian(c, n);
            FilterSpec f = random_filter(n, rng);
            f.up = f.down;
            Eigen::MatrixXd H = build_filter(f, ops).to_dense();
            const Eigen::MatrixXd& U = spectral_basis(ops).eigenvectors;
            Eigen::MatrixXd D = U.transpose() * H * U;
            D.diagonal().setZero();
            double hnorm = std::max(1.0, H.norm());
            CHECK(D.cwiseAbs().maxCoeff() <= 1e-7 * hnorm);
        }
    }
}
