#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amp/matrix.hpp"

using namespace amp;

namespace {

Matrix from_rows(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& rows) {
    Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()), p);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c] % p;
    return m;
}

Matrix random_matrix(std::mt19937_64& rng, std::uint32_t p, int max_side = 6) {
    int r = static_cast<int>(rng() % (max_side + 1));
    int c = static_cast<int>(rng() % (max_side + 1));
    Matrix m(r, c, p);
    for (auto& x : m.a) x = static_cast<std::uint32_t>(rng() % p);
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(Matrix(0, 0, 2)) == 0);
    CHECK(rank(Matrix::identity(3, 2)) == 3);
    CHECK(rank(from_rows(2, {{1, 1}, {1, 1}})) == 1);  // row reduction by hand
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(Matrix::identity(4, 3)).cols == 0);
    CHECK(kernel_basis(Matrix(2, 3, 2)).cols == 3);

    // [[1,1]] over F_2: enumerating F_2^2 leaves exactly (1,1)
    Matrix k = kernel_basis(from_rows(2, {{1, 1}}));
    REQUIRE(k.cols == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(1, 0) == 1);
}

TEST_CASE("solve_in_span") {
    Matrix id = Matrix::identity(3, 5);
    Matrix t = from_rows(5, {{2}, {3}, {4}});
    auto x = solve_in_span(id, t);
    REQUIRE(x.has_value());
    CHECK(*x == t);

    Matrix empty(2, 0, 2);
    Matrix target = from_rows(2, {{1}, {0}});
    CHECK(!solve_in_span(empty, target).has_value());

    Matrix basis = from_rows(2, {{1}, {1}});
    auto y = solve_in_span(basis, basis);
    REQUIRE(y.has_value());
    CHECK(y->at(0, 0) == 1);
}

TEST_CASE("quotient basis") {
    CHECK(quotient_basis(Matrix(2, 0, 2), 2).cols == 2);
    CHECK(quotient_basis(Matrix::identity(3, 2), 3).cols == 0);

    Matrix sub = from_rows(2, {{1}, {1}});
    Matrix q = quotient_basis(sub, 2);
    REQUIRE(q.cols == 1);
    CHECK(rank(hstack(sub, q)) == 2);

    CHECK_THROWS(quotient_basis(sub, 3));
}

TEST_CASE("rank-nullity and exactness of kernels over random matrices") {
    std::mt19937_64 rng(20240811);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int it = 0; it < 200; ++it) {
            Matrix m = random_matrix(rng, p);
            Matrix k = kernel_basis(m);
            CHECK(rank(m) + k.cols == m.cols);
            if (m.rows > 0 && k.cols > 0) CHECK((m * k).is_zero());
            Matrix q = quotient_basis(column_space_basis(m), m.rows);
            CHECK(rank(hstack(column_space_basis(m), q)) == m.rows);
        }
    }
}

TEST_CASE("solve_in_span recovers random combinations") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
        Matrix basis = random_matrix(rng, 3);
        if (basis.cols == 0) continue;
        Matrix coeff(basis.cols, 2, 3);
        for (auto& x : coeff.a) x = static_cast<std::uint32_t>(rng() % 3);
        Matrix target = basis * coeff;
        auto x = solve_in_span(basis, target);
        REQUIRE(x.has_value());
        CHECK(basis * *x == target);
    }
}
