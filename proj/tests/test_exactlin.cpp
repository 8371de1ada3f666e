#include "doctest.h"
#include "helpers.hpp"
#include "hpa/errors.hpp"

using namespace hpa;
using namespace testing_util;

TEST_CASE("scalars stay in lowest terms") {
    Scalar a = q(2, 4);
    CHECK(a.to_string() == "1/2");
    CHECK((a + q(1, 2)).to_string() == "1");
    CHECK(q(-3, 6).to_string() == "-1/2");
    CHECK(q(3, -6).rational().get_den() == 2);
    CHECK(q(0, 5).to_string() == "0");
    Field f5 = Field::prime(5);
    Scalar r = Scalar::from_int(f5, 7);
    CHECK(r.to_string() == "2 mod 5");
    CHECK((r * r.inverse()).is_one());
    CHECK(Scalar::from_int(f5, -1).residue() == 4);
    CHECK(Scalar::parse(f5, "3 mod 5") == Scalar::from_int(f5, 3));
    CHECK(Scalar::parse(Q(), "-7/21") == q(-1, 3));
}

TEST_CASE("fields do not mix") {
    Scalar a = q(1);
    Scalar b = Scalar::one(Field::prime(3));
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(kron(mat({{1}}), mat(Field::prime(3), {{1}})), FieldMismatch);
    CHECK_THROWS(Field::prime(4));
    CHECK_THROWS(Field::prime(1));
    CHECK_THROWS_AS(q(0).inverse(), std::domain_error);
}

TEST_CASE("rref examples") {
    auto r = rref(Matrix::identity(Q(), 2));
    CHECK(r.rank == 2);
    CHECK(r.reduced == Matrix::identity(Q(), 2));
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});

    r = rref(mat({{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    CHECK(r.reduced == mat({{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});

    Field f2 = Field::prime(2);
    r = rref(mat(f2, {{1, 1}, {1, 2}}));
    CHECK(r.rank == 2);
    CHECK(r.reduced == Matrix::identity(f2, 2));
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix::identity(Q(), 3)).dim() == 0);
    CHECK(kernel_basis(Matrix(Q(), 3, 3)).dim() == 3);
    Subspace k = kernel_basis(mat({{1, 1}}));
    CHECK(k.dim() == 1);
    CHECK(k == Subspace::span(Q(), 2, {vec({1, -1})}));
}

TEST_CASE("solve examples") {
    Vec b = vec({3, -1, 2});
    CHECK(*solve(Matrix::identity(Q(), 3), b) == b);
    CHECK(*solve(mat({{1, 1}}), vec({2})) == vec({2, 0}));
    CHECK_FALSE(solve(mat({{1}, {1}}), vec({0, 1})).has_value());
}

TEST_CASE("kron examples") {
    CHECK(kron(Matrix::identity(Q(), 2), Matrix::identity(Q(), 3)) == Matrix::identity(Q(), 6));
    Matrix m = mat({{1, 2}, {3, 4}});
    CHECK(kron(mat({{5}}), m) == m.scaled(q(5)));
    CHECK(kron(mat({{0, 1}, {1, 0}}), mat({{2}})) == mat({{0, 2}, {2, 0}}));
    // (i,j) -> i*dim2 + j
    Matrix a = mat({{1, 0}, {0, 0}}), bb = mat({{0, 1}, {0, 0}});
    Matrix k = kron(a, bb);
    CHECK(k(0 * 2 + 0, 0 * 2 + 1) == q(1));
    CHECK(tensor(vec({1, 2}), vec({3, 4, 5})) == vec({3, 4, 5, 6, 8, 10}));
}

TEST_CASE("subspace operations") {
    Subspace u = Subspace::span(Q(), 3, {vec({1, 2, 3}), vec({0, 1, 1})});
    CHECK(intersection(u, u) == u);
    Subspace e1 = Subspace::span(Q(), 2, {vec({1, 0})});
    Subspace e2 = Subspace::span(Q(), 2, {vec({0, 1})});
    CHECK(sum(e1, e2) == Subspace::whole(Q(), 2));
    Subspace p = Subspace::span(Q(), 2, {vec({1, 1})});
    Subspace m = Subspace::span(Q(), 2, {vec({1, -1})});
    CHECK(intersection(p, m).dim() == 0);
    CHECK(u.contains(vec({2, 5, 7})));
    CHECK_FALSE(u.contains(vec({0, 0, 1})));
    CHECK(*u.coordinates(vec({2, 5, 7})) == u.coordinate_map() * vec({2, 5, 7}));
    CHECK_THROWS_AS(sum(e1, u), DimensionError);
}

TEST_CASE("property: rank-nullity, rref idempotence, exact solve") {
    std::mt19937 rng(11);
    for (Field f : {Q(), Field::prime(7)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            Matrix m = random_matrix(rng, f, r, c, trial % 3);
            CHECK(rank(m) + kernel_basis(m).dim() == c);
            Rref once = rref(m);
            Rref twice = rref(once.reduced);
            CHECK(twice.reduced == once.reduced);
            CHECK(twice.pivots == once.pivots);
            Subspace k = kernel_basis(m);
            for (std::size_t j = 0; j < k.dim(); ++j) CHECK(is_zero(m * k.vector(j)));

            std::size_t n = 1 + rng() % 5;
            Matrix inv = random_invertible(rng, f, n);
            Vec v = random_matrix(rng, f, n, 1).column(0);
            auto s = solve(inv, inv * v);
            REQUIRE(s.has_value());
            CHECK(*s == v);
            CHECK(*inverse(inv) * inv == Matrix::identity(f, n));

            Matrix a = random_matrix(rng, f, 2, 2), b = random_matrix(rng, f, 2, 1), cc = random_matrix(rng, f, 1, 3);
            CHECK(kron(kron(a, b), cc) == kron(a, kron(b, cc)));
        }
    }
}

TEST_CASE("property: rationals are normalized") {
    std::mt19937 rng(5);
    Matrix m = random_matrix(rng, Q(), 4, 4);
    Matrix p = m * m * m;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const mpq_class& x = p(i, j).rational();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
            CHECK(x.get_den() > 0);
            CHECK((g == 1 || x.get_num() == 0));
        }
}
