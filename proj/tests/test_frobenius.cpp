#include "doctest.h"
#include "helpers.hpp"
#include "hpa/duality.hpp"
#include "hpa/errors.hpp"
#include "hpa/frobenius.hpp"

using namespace hpa;
using namespace testing_util;

namespace {

Vec group_sum(const GroupTable& g, Field f) {
    Vec v;
    for (std::size_t i = 0; i < g.order(); ++i) v.push_back(Scalar::one(f));
    return v;
}

// Delta^3(t) by explicit loops over the coproduct table, legs (i, j, k, l).
Vec delta3(const BialgebraPresentation& h, const Vec& t) {
    std::size_t m = h.dim();
    const CoalgebraPresentation& c = h.coalgebra;
    Vec out = zero_vec(t.front().field(), m * m * m * m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                Scalar s1 = t[x] * c.delta(x, a, b);
                if (s1.is_zero()) continue;
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t y = 0; y < m; ++y) {
                        Scalar s2 = s1 * c.delta(a, i, y);
                        if (s2.is_zero()) continue;
                        for (std::size_t j = 0; j < m; ++j)
                            for (std::size_t k = 0; k < m; ++k) {
                                Scalar s3 = s2 * c.delta(y, j, k);
                                if (!s3.is_zero()) out[((i * m + j) * m + k) * m + b] += s3;
                            }
                    }
            }
    return out;
}

}  // namespace

TEST_CASE("integrals of group algebras") {
    HopfPresentation z2 = group_algebra(cyclic_group(2), Q());
    IntegralSpace t = integrals(z2, IntegralSide::left_in_h);
    REQUIRE(t.basis.dim() == 1);
    CHECK(t.basis.vector(0) == vec({1, 1}));
    // dual side: evaluation at the identity
    IntegralSpace phi = integrals(z2, IntegralSide::left_in_dual);
    REQUIRE(phi.basis.dim() == 1);
    CHECK(phi.basis.vector(0) == vec({1, 0}));

    for (const auto& g : small_groups(6))
        for (Field f : {Q(), Field::prime(5), Field::prime(2)}) {
            HopfPresentation h = group_algebra(g, f);
            IntegralSpace s = integrals(h, IntegralSide::left_in_h);
            REQUIRE(s.basis.dim() == 1);
            CHECK(s.basis.contains(group_sum(g, f)));
            IntegralSpace d = integrals(h, IntegralSide::left_in_dual);
            REQUIRE(d.basis.dim() == 1);
            CHECK(d.basis.contains(unit_vec(f, g.order(), g.identity())));
        }
}

TEST_CASE("integrals of Sweedler's algebra") {
    HopfPresentation h4 = build_sweedler4(Q());
    IntegralSpace t = integrals(h4, IntegralSide::left_in_h);
    REQUIRE(t.basis.dim() == 1);
    // (1 + c)x on the basis 1, c, x, cx
    CHECK(t.basis.contains(vec({0, 0, 1, 1})));
    CHECK(h4.coalgebra().epsilon(t.basis.vector(0)).is_zero());
    CHECK(integrals(h4, IntegralSide::left_in_dual).basis.dim() == 1);
    FrobeniusData fd = frobenius_pair(h4);
    CHECK(fd.checks.all_passed());
}

TEST_CASE("Frobenius pairs") {
    FrobeniusData z2 = frobenius_pair(group_algebra(cyclic_group(2), Q()));
    CHECK(z2.t == vec({1, 1}));
    CHECK(z2.phi == vec({1, 0}));
    CHECK(z2.pairing == q(1));
    CHECK(z2.checks.all_passed());

    FrobeniusData z3 = frobenius_pair(group_algebra(cyclic_group(3), Q()));
    CHECK(z3.t == vec({1, 1, 1}));
    CHECK(z3.phi == vec({1, 0, 0}));
    CHECK(z3.checks.all_passed());

    // over F_2 the integral 1 + g has eps(t) = 0, but <delta_1, t> = 1 still
    Field f2 = Field::prime(2);
    HopfPresentation h2 = group_algebra(cyclic_group(2), f2);
    FrobeniusData p2 = frobenius_pair(h2);
    CHECK(p2.pairing == Scalar::one(f2));
    CHECK(h2.coalgebra().epsilon(p2.t).is_zero());
    CHECK(p2.checks.all_passed());

    for (const auto& g : small_groups(6)) CHECK(frobenius_pair(group_algebra(g, Q())).checks.all_passed());
}

TEST_CASE("four-leg cocommutativity of integrals") {
    for (const auto& g : small_groups(6)) {
        BialgebraPresentation h = group_algebra(g, Q()).bialgebra;
        CHECK(check_cocommutativity_534(h, group_sum(g, Q())).passed);
        CHECK(check_cocommutativity_534(h, unit_vec(Q(), g.order(), g.order() - 1)).passed);
    }
    HopfPresentation h4 = build_sweedler4(Q());
    CHECK(check_cocommutativity_534(h4.bialgebra, zero_vec(Q(), 4)).passed);

    Vec t = frobenius_pair(h4).t;
    std::size_t m = 4;
    Vec d3 = delta3(h4.bialgebra, t);
    bool oracle = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    oracle = oracle && d3[((i * m + j) * m + k) * m + l] == d3[((i * m + k) * m + j) * m + l];
    EquationResult r = check_cocommutativity_534(h4.bialgebra, t);
    CHECK(r.passed == oracle);
    CHECK_FALSE(r.passed);
    CHECK(r.witness.size() == 4);
    CHECK_FALSE(is_cocommutative_element(h4.bialgebra, t));
    // the four-leg identity implies cocommutativity of t
    CHECK(is_cocommutative_element(h4.bialgebra, vec({1, 1, 0, 0})));
}

TEST_CASE("Frobenius system for partial and global Z2 actions") {
    HopfPresentation z2 = group_algebra(cyclic_group(2), Q());
    FrobeniusData fd = frobenius_pair(z2);
    for (const auto& p : {global_z2_on_k2(Q()), partial_z2_on_k2(Q())}) {
        FrobeniusSystem s = build_frobenius_system(group_to_kG(p), fd);
        CHECK(s.identities.passed("commute"));
        CHECK(s.identities.passed("bimodule"));
        CHECK(s.identities.passed("counit-like"));
    }
    FrobeniusSystem g = build_frobenius_system(group_to_kG(global_z2_on_k2(Q())), fd);
    // nu(a # h) = phi(h) a
    CHECK(g.nu.rows() == 2);
    CHECK(g.smash.underline.dim() == 4);
}

TEST_CASE("Frobenius system preconditions") {
    FrobeniusData fd = frobenius_pair(group_algebra(cyclic_group(2), Q()));
    try {
        build_frobenius_system(noncentral_triangular_action(Q()), fd);
        FAIL("expected a precondition failure");
    } catch (const PreconditionError& e) {
        CHECK(e.hypothesis() == "central");
    }
    try {
        build_frobenius_system(zero_action(diagonal_algebra(Q(), 2), group_algebra(cyclic_group(2), Q()).bialgebra), fd);
        FAIL("expected a precondition failure");
    } catch (const PreconditionError& e) {
        CHECK(e.hypothesis() == "partial");
    }
    // a partial action of the dual of H4 on k, where the integral fails the four-leg identity
    HopfPresentation h4 = build_sweedler4(Q());
    ActionMap a = coaction_to_action(sweedler_on_k(Q(), q(1)));
    REQUIRE(classify_action(a).is_partial);
    HopfPresentation dh = cop(dual_hopf(h4));
    REQUIRE(dh.bialgebra == a.hopf);
    FrobeniusData fh = frobenius_pair(dh);
    CHECK(fh.checks.all_passed());
    if (!check_cocommutativity_534(a.hopf, fh.t).passed) CHECK_THROWS_AS(build_frobenius_system(a, fh), PreconditionError);
}

TEST_CASE("property: Frobenius systems for partial group actions") {
    for (const auto& g : small_groups(6)) {
        FrobeniusData fd = frobenius_pair(group_algebra(g, Q()));
        for (std::size_t k = 1; k <= g.order(); ++k) {
            std::vector<std::size_t> subset;
            for (std::size_t i = 0; i < k; ++i) subset.push_back(i);
            ActionMap a = group_to_kG(restricted_permutation_action(g, g.table, subset, Q()));
            FrobeniusSystem s = build_frobenius_system(a, fd);
            CHECK_MESSAGE(s.identities.all_passed(), g.order() << " " << k);
        }
    }
    FrobeniusData z3 = frobenius_pair(group_algebra(cyclic_group(3), Q()));
    CHECK(build_frobenius_system(group_to_kG(partial_z3_on_k2(Q())), z3).identities.all_passed());
    FrobeniusData s3 = frobenius_pair(group_algebra(symmetric_group3(), Q()));
    CHECK(build_frobenius_system(group_to_kG(partial_s3_on_k2(Q())), s3).identities.all_passed());
}
