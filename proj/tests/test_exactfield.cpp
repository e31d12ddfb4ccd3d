#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tatecalc/matrix.hpp"

using namespace tate;

namespace {

Matrix from_rows(PrimeField f, std::vector<std::vector<std::uint32_t>> rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j] % f.modulus();
    return m;
}

Matrix random_matrix(PrimeField f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<std::uint32_t>(rng() % f.modulus());
    return m;
}

}  // namespace

TEST_CASE("prime field construction and arithmetic") {
    PrimeField f(101);
    CHECK(f.modulus() == 101);
    CHECK(f.add(100, 2) == 1);
    CHECK(f.mul(51, 2) == 1);
    CHECK(f.inv(2) == 51);
    CHECK(f.neg(1) == 100);
    CHECK(f.reduce(-1) == 100);
    CHECK_THROWS_AS(PrimeField(100), InputError);
    CHECK_THROWS_AS(PrimeField(1), InputError);
    CHECK_NOTHROW(PrimeField(2));
}

TEST_CASE("rref on the spec examples") {
    PrimeField f5(5);
    SUBCASE("identity is its own rref") {
        Matrix id = Matrix::identity(f5, 2);
        auto rr = rref(id);
        CHECK(rr.r == id);
        CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("already reduced row") {
        Matrix m = from_rows(f5, {{1, 1}});
        auto rr = rref(m);
        CHECK(rr.r == m);
        CHECK(rr.pivots == std::vector<std::size_t>{0});
    }
    SUBCASE("rank one 2x2, hand-reduced") {
        // [[2,4],[1,2]]: divide row 0 by 2, eliminate -> [[1,2],[0,0]]
        Matrix m = from_rows(f5, {{2, 4}, {1, 2}});
        auto rr = rref(m);
        CHECK(rr.r == from_rows(f5, {{1, 2}, {0, 0}}));
        CHECK(rr.pivots == std::vector<std::size_t>{0});
    }
}

TEST_CASE("kernel on the spec examples") {
    PrimeField f5(5);
    CHECK(kernel(Matrix::identity(f5, 3)).cols() == 0);
    CHECK(kernel(Matrix(f5, 2, 3)).cols() == 3);
    Matrix k = kernel(from_rows(f5, {{1, 1}}));
    REQUIRE(k.cols() == 1);
    // one column, proportional to (1, 4)
    CHECK(f5.mul(k(0, 0), 4) == k(1, 0));
    CHECK((k(0, 0) != 0 || k(1, 0) != 0));
}

TEST_CASE("solve on the spec examples") {
    PrimeField f5(5);
    SUBCASE("identity system") {
        Matrix b = from_rows(f5, {{2}, {3}});
        auto x = solve(Matrix::identity(f5, 2), b);
        REQUIRE(x.has_value());
        CHECK(*x == b);
    }
    SUBCASE("inconsistent") {
        Matrix a(f5, 2, 2);
        Matrix b = from_rows(f5, {{1}, {0}});
        CHECK_FALSE(solve(a, b).has_value());
    }
    SUBCASE("scalar 2x = 3 over F_5") {
        auto x = solve(from_rows(f5, {{2}}), from_rows(f5, {{3}}));
        REQUIRE(x.has_value());
        CHECK((*x)(0, 0) == 4);
    }
    SUBCASE("dimension mismatch is an input error") {
        CHECK_THROWS_AS(solve(Matrix(f5, 2, 2), Matrix(f5, 3, 1)), InputError);
    }
}

TEST_CASE("matrix invariants on random instances") {
    PrimeField f(101);
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix a = random_matrix(f, r, c, rng);

        Matrix k = kernel(a);
        CHECK((a * k).is_zero());
        CHECK(rank(a) + k.cols() == a.cols());

        auto rr = rref(a);
        CHECK(rref(rr.r).r == rr.r);

        Matrix b = a * random_matrix(f, c, 2, rng);  // consistent by construction
        auto x = solve(a, b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
    }
}

TEST_CASE("quotient map splits off the column space") {
    PrimeField f(101);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t d = 2 + rng() % 5, w = rng() % 4;
        Matrix W = random_matrix(f, d, w, rng);
        QuotientMap q = quotient_map(W);
        CHECK(q.proj.rows() == d - rank(W));
        CHECK((q.proj * W).is_zero());
        CHECK(q.proj * q.section == Matrix::identity(f, q.proj.rows()));
        CHECK(rank(q.proj) == q.proj.rows());
    }
}
