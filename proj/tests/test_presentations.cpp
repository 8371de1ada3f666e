#include "doctest.h"
#include "helpers.hpp"
#include "hpa/errors.hpp"
#include "hpa/presentations.hpp"

using namespace hpa;
using namespace testing_util;

TEST_CASE("Sweedler's algebra") {
    HopfPresentation h = build_sweedler4(Q());
    AxiomReport rep = verify(h);
    CHECK(rep.all_passed());
    CHECK(h.coalgebra().coproduct(2).size() == 2);  // Delta(x) = c(x)x + x(x)1
    CHECK(h.coalgebra().counit()[1] == q(1));
    CHECK(h.coalgebra().counit()[2] == q(0));
    // S(c) = c, S(x) = -cx
    CHECK(h.antipode.column(1) == vec({0, 1, 0, 0}));
    CHECK(h.antipode.column(2) == vec({0, 0, 0, -1}));
    Matrix s2 = h.antipode * h.antipode;
    CHECK_FALSE(s2 == Matrix::identity(Q(), 4));
    CHECK(s2.column(2) == vec({0, 0, -1, 0}));
    CHECK_THROWS_AS(build_sweedler4(Field::prime(2)), PreconditionError);
    CHECK(verify(build_sweedler4(Field::prime(5))).all_passed());
}

TEST_CASE("group algebras") {
    HopfPresentation z2 = group_algebra(cyclic_group(2), Q());
    CHECK(z2.dim() == 2);
    CHECK(verify(z2).all_passed());
    CHECK(z2.antipode == Matrix::identity(Q(), 2));
    HopfPresentation z3 = group_algebra(cyclic_group(3), Q());
    CHECK(z3.antipode == mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
    HopfPresentation s3 = group_algebra(symmetric_group3(), Q());
    CHECK(s3.dim() == 6);
    CHECK(verify(s3).all_passed());
    CHECK_THROWS_AS(make_group_table({{0, 1}, {1, 1}}), InputError);
}

TEST_CASE("every group of order <= 8 gives a Hopf algebra") {
    auto groups = small_groups(8);
    CHECK(groups.size() == 14);
    for (const auto& g : groups) {
        for (Field f : {Q(), Field::prime(3)}) {
            HopfPresentation h = group_algebra(g, f);
            CHECK(verify(h).all_passed());
            CHECK(h.antipode * h.antipode == Matrix::identity(f, h.dim()));
        }
    }
}

TEST_CASE("perturbed structure constants fail associativity") {
    HopfPresentation h = build_sweedler4(Q());
    Matrix m = h.algebra().mult();
    m(3, 1 * 4 + 2) += q(1);  // c x gets an extra cx
    AlgebraPresentation bad({}, m, h.algebra().unit());
    AxiomReport rep = verify(bad);
    CHECK_FALSE(rep.passed("associativity"));
    CHECK(rep.at("associativity").witness.size() == 4);  // (i,j,m,k)
}

TEST_CASE("duals and twists") {
    HopfPresentation z2 = group_algebra(cyclic_group(2), Q());
    HopfPresentation d = dual_hopf(z2);
    CHECK(verify(d).all_passed());
    // function algebra: the dual basis consists of orthogonal idempotents
    const AlgebraPresentation& a = d.algebra();
    CHECK(a.multiply(unit_vec(Q(), 2, 0), unit_vec(Q(), 2, 0)) == vec({1, 0}));
    CHECK(a.multiply(unit_vec(Q(), 2, 0), unit_vec(Q(), 2, 1)) == vec({0, 0}));
    CHECK(a.unit() == vec({1, 1}));

    std::vector<HopfPresentation> hs{z2, build_sweedler4(Q()), group_algebra(symmetric_group3(), Q()),
                                     group_algebra(quaternion_group(), Field::prime(5))};
    for (const auto& h : hs) {
        CHECK(cop(cop(h)) == h);
        CHECK(op(op(h)) == h);
        CHECK(dual_hopf(dual_hopf(h)) == h);
        CHECK(dual_hopf(op(h)) == cop(dual_hopf(h)));
        CHECK(verify(dual_hopf(h)).all_passed());
        CHECK(verify(cop(h)).all_passed());
        CHECK(verify(op(h)).all_passed());
    }
}

TEST_CASE("sweedler is self-dual up to relabeling but not commutative") {
    HopfPresentation h = build_sweedler4(Q());
    CHECK_FALSE(h.algebra().multiply(unit_vec(Q(), 4, 1), unit_vec(Q(), 4, 2)) ==
                h.algebra().multiply(unit_vec(Q(), 4, 2), unit_vec(Q(), 4, 1)));
    CHECK(group_of_grouplikes(h.bialgebra) == std::nullopt);
    auto g = group_of_grouplikes(group_algebra(dihedral_group(4), Q()).bialgebra);
    REQUIRE(g.has_value());
    CHECK(g->order() == 8);
}

TEST_CASE("small algebras") {
    for (auto a : {ground_algebra(Q()), diagonal_algebra(Q(), 3), truncated_polynomials(Q(), 3), upper_triangular2(Q())})
        CHECK(verify(a).all_passed());
    AlgebraPresentation p = product_algebra(diagonal_algebra(Q(), 2), truncated_polynomials(Q(), 2));
    CHECK(verify(p).all_passed());
    CHECK(p.unit() == vec({1, 1, 1, 0}));
    std::mt19937 rng(3);
    Matrix basis = random_invertible(rng, Q(), 4);
    AlgebraPresentation c = change_basis(p, basis);
    CHECK(verify(c).all_passed());
    CHECK(basis * c.unit() == p.unit());
}
