#include "doctest.h"
#include "helpers.hpp"
#include "hpa/duality.hpp"
#include "hpa/errors.hpp"

using namespace hpa;
using namespace testing_util;

namespace {

Vec operator*(const Vec& v, const Scalar& s) { return s * v; }

BialgebraPresentation kz2() { return group_algebra(cyclic_group(2), Q()).bialgebra; }

std::vector<CoactionMap> instances() {
    Field f = Q();
    BialgebraPresentation g2 = kz2();
    std::vector<CoactionMap> out{
        trivial_coaction(truncated_polynomials(f, 2), g2),
        trivial_coaction(ground_algebra(f), build_sweedler4(f).bialgebra),
        sweedler_on_k(f, q(0)),
        sweedler_on_k(f, q(1)),
        sweedler_on_k(f, q(-1, 3)),
        sweedler_on_b(f),
        zero_coaction(diagonal_algebra(f, 2), g2),
        zero_coaction(ground_algebra(f), build_sweedler4(f).bialgebra),
        regular_coaction(g2),
        coaction_on_ground(g2, vec({1, 1}) * q(1, 2)),
    };
    CoactionMap e = coaction_on_ground(g2, vec({1, 1}) * q(1, 2));
    out.push_back(direct_sum(e, trivial_coaction(ground_algebra(f), g2)));
    out.push_back(direct_sum(e, zero_coaction(ground_algebra(f), g2)));
    out.push_back(change_basis(direct_sum(e, e), mat({{1, 1}, {-1, 0}})));
    out.push_back(change_basis(sweedler_on_b(f), mat({{2, 1}, {0, 1}})));
    return out;
}

// (f . g)(h) = g(h_(2))_[0] f(h_(1) g(h_(2))_[1]) straight from the structure constants,
// on Hom(H, A) flattened as j*n + a.
Vec opposite_koppinen(const CoactionMap& c, const Vec& fv, const Vec& gv) {
    std::size_t n = c.n(), m = c.m();
    const AlgebraPresentation& A = c.algebra;
    const AlgebraPresentation& H = c.hopf.algebra;
    auto at = [&](const Vec& v, std::size_t j) { return Vec(v.begin() + j * n, v.begin() + (j + 1) * n); };
    Vec out = zero_vec(Q(), n * m);
    for (std::size_t l = 0; l < m; ++l) {
        Vec val = zero_vec(Q(), n);
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q2 = 0; q2 < m; ++q2) {
                Scalar d = c.hopf.coalgebra.delta(l, p, q2);
                if (d.is_zero()) continue;
                Vec rg = c.rho * at(gv, q2);  // g(h_q)_[0] (x) g(h_q)_[1]
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t s = 0; s < m; ++s) {
                        if (rg[b * m + s].is_zero()) continue;
                        for (std::size_t k = 0; k < m; ++k) {
                            Scalar w = d * rg[b * m + s] * H.mu(p, s, k);
                            if (w.is_zero()) continue;
                            axpy(val, w, A.multiply(unit_vec(Q(), n, b), at(fv, k)));
                        }
                    }
            }
        for (std::size_t a = 0; a < n; ++a) out[l * n + a] = val[a];
    }
    return out;
}

}  // namespace

TEST_CASE("dual of the trivial coaction coring") {
    BialgebraPresentation h4 = build_sweedler4(Q()).bialgebra;
    DualRing r = dual_ring_of_coring(build_coring(trivial_coaction(ground_algebra(Q()), h4)));
    REQUIRE(r.ring.dim() == 4);
    CHECK(r.space.basis() == Matrix::identity(Q(), 4));
    // (f#g)(h) = g(h_(1)) f(h_(2)): convolution on H^cop
    CHECK(r.ring.mult() == dual(cop(h4)).algebra.mult());
    CHECK(r.unital.dim() == 4);
    CHECK(r.alpha == Matrix::identity(Q(), 4));
    CHECK(r.beta == Matrix::identity(Q(), 4));
    CHECK(verify_dual_ring(r, RingMode::full).all_passed());
    CHECK(verify_unital_iso(r).all_passed());

    DualRing r2 = dual_ring_of_coring(build_coring(trivial_coaction(truncated_polynomials(Q(), 2), kz2())));
    CHECK(r2.ring.dim() == 4);
    CHECK(r2.unital.dim() == 4);
    CHECK(verify_dual_ring(r2, RingMode::full).all_passed());
}

TEST_CASE("dual ring for the Sweedler coaction on k") {
    HopfPresentation h4 = build_sweedler4(Q());
    for (long a : {0, 1, 3}) {
        CoactionMap c = sweedler_on_k(Q(), q(a));
        Vec e = sweedler_idempotent(h4, q(a));
        std::size_t he = rank(h4.algebra().right_mult(e));  // dim He
        DualRing r = dual_ring_of_coring(build_coring(c));
        CHECK(r.ring.dim() == 4);
        CHECK(r.unital.dim() == he);
        CHECK(r.underline_space.dim() == he);
        CHECK(verify_dual_ring(r, RingMode::lax).all_passed());
        CHECK(verify_unital_iso(r).all_passed());
    }
}

TEST_CASE("dual ring of the zero coaction is weak") {
    DualRing r = dual_ring_of_coring(build_coring(zero_coaction(diagonal_algebra(Q(), 2), kz2())));
    // C 1_A = 0, so 1_A f = f(- 1_A) = 0 and the counit vanishes
    CHECK(r.unital.dim() == 0);
    CHECK(is_zero(r.ring.unit()));
    CHECK(verify_dual_ring(r, RingMode::weak).all_passed());
    CHECK_FALSE(verify_dual_ring(r, RingMode::full).all_passed());
}

TEST_CASE("dual ring needs a lax coaction") {
    CoactionMap c(ground_algebra(Q()), kz2(), mat({{1}, {1}}));  // rho(1) = 1 (x) (1 + g)
    REQUIRE(check_coaction_equation(c, "2.1.1").passed == false);
    CHECK_THROWS_AS(build_koppinen(c), PreconditionError);
    CHECK_THROWS_AS(prop410_iso(c), PreconditionError);
}

TEST_CASE("property: dual rings of lax corings") {
    for (const auto& c : instances()) {
        auto v = classify_coaction(c);
        REQUIRE(v.is_lax);
        CoringData d = build_coring(c);
        DualRing r = dual_ring_of_coring(d);
        CHECK(r.ring.dim() == c.n() * c.m());
        CHECK(r.unital.dim() == d.underline_basis.dim());
        CHECK(r.underline_space.dim() == d.underline_basis.dim());
        CHECK(verify_dual_ring(r, RingMode::lax).all_passed());
        // the dual ring verdicts match the coring verdicts
        CHECK(verify_dual_ring(r, RingMode::weak).all_passed() ==
              verify_coring_axioms(d, CoringMode::weak).all_passed());
        CHECK(verify_dual_ring(r, RingMode::weak).all_passed() == v.is_weak);
        CHECK(verify_dual_ring(r, RingMode::full).all_passed() == v.is_global);
        CHECK(verify_unital_iso(r).all_passed());
    }
}

TEST_CASE("Koppinen smash of the trivial coaction") {
    CoactionMap c = trivial_coaction(truncated_polynomials(Q(), 2), kz2());
    KoppinenSmash k = build_koppinen(c);
    CHECK(k.checks.all_passed());
    std::size_t n = 2, m = 2, N = 4;
    const AlgebraPresentation& A = c.algebra;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            // (f#g)(h) = f(h_(2)) g(h_(1)); for kZ2 both legs are the same group element
            Vec expect = zero_vec(Q(), N);
            for (std::size_t l = 0; l < m; ++l) {
                if (i / n != l || j / n != l) continue;
                Vec p = A.multiply(unit_vec(Q(), n, i % n), unit_vec(Q(), n, j % n));
                for (std::size_t a = 0; a < n; ++a) expect[l * n + a] = p[a];
            }
            CHECK(k.product.multiply(unit_vec(Q(), N, i), unit_vec(Q(), N, j)) == expect);
        }
    CHECK(k.underline.dim() == N);
}

TEST_CASE("Koppinen underline for the Sweedler coaction on k") {
    HopfPresentation h4 = build_sweedler4(Q());
    for (long a : {0, 2}) {
        KoppinenSmash k = build_koppinen(sweedler_on_k(Q(), q(a)));
        CHECK(k.checks.all_passed());
        // f(h) = f(h e): kernel of f -> f - f o R_e on H*
        Matrix re = h4.algebra().right_mult(sweedler_idempotent(h4, q(a)));
        Matrix cond = Matrix::identity(Q(), 4) - re.transpose();
        CHECK(k.underline.dim() == kernel_basis(cond).dim());
    }
}

TEST_CASE("property: Koppinen smash products") {
    for (const auto& c : instances()) {
        KoppinenSmash k = build_koppinen(c);
        CHECK(k.checks.all_passed());
        CHECK(verify(k.product).passed("associativity"));
        Matrix by_one(Q(), c.n() * c.m(), c.n() * c.m());
        for (std::size_t a = 0; a < c.n(); ++a) by_one = by_one + k.left[a].scaled(c.algebra.unit()[a]);
        CHECK(k.underline == Subspace::column_space(by_one));
        if (classify_coaction(c).is_partial) {
            Vec one = k.eta * c.algebra.unit();
            for (std::size_t i = 0; i < k.underline.dim(); ++i) {
                Vec u = k.underline.vector(i);
                CHECK(k.product.multiply(one, u) == u);
                CHECK(k.product.multiply(u, one) == u);
            }
        }
    }
}

TEST_CASE("transfer to actions of the dual") {
    BialgebraPresentation h4 = build_sweedler4(Q()).bialgebra;
    for (const auto& h : {kz2(), h4, group_algebra(symmetric_group3(), Q()).bialgebra})
        CHECK(dual_basis_identity(h));

    // trivial: h*.a = h*(1_H) a
    CoactionMap t = trivial_coaction(truncated_polynomials(Q(), 2), h4);
    ActionMap ta = coaction_to_action(t);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t a = 0; a < 2; ++a)
            CHECK(ta.act(i, a) == unit_vec(Q(), 2, a) * h4.algebra.unit()[i]);

    // on k: h*.1 = h*(e_alpha)
    Vec e = sweedler_idempotent(build_sweedler4(Q()), q(3));
    ActionMap sa = coaction_to_action(sweedler_on_k(Q(), q(3)));
    for (std::size_t i = 0; i < 4; ++i) CHECK(sa.act(i, 0) == vec({1}) * e[i]);
    CHECK(classify_action(sa).is_partial);
    CHECK_FALSE(classify_action(sa).is_global);

    CoactionMap b = sweedler_on_b(Q());
    CoactionMap back = action_to_coaction(coaction_to_action(b));
    CHECK(back.rho == b.rho);
    CHECK(back.algebra == b.algebra);
    CHECK(back.hopf == b.hopf);
}

TEST_CASE("property: lax and partial flags transfer both ways") {
    std::vector<CoactionMap> cs = instances();
    std::mt19937 rng(17);
    for (int t = 0; t < 20; ++t) {
        BialgebraPresentation h = t % 2 ? kz2() : build_sweedler4(Q()).bialgebra;
        AlgebraPresentation alg = t % 3 ? ground_algebra(Q()) : diagonal_algebra(Q(), 2);
        cs.emplace_back(alg, h, random_matrix(rng, Q(), alg.dim() * h.dim(), alg.dim(), t % 4));
    }
    for (int t = 0; t < 5; ++t) {
        const CoactionMap& base = cs[2 + t];
        cs.push_back(change_basis(base, random_invertible(rng, Q(), base.n())));
    }
    int weak_agree = 0, weak_total = 0;
    for (const auto& c : cs) {
        auto v = classify_coaction(c);
        ActionMap a = coaction_to_action(c);
        auto w = classify_action(a);
        CHECK(w.is_lax == v.is_lax);
        CHECK(w.is_partial == v.is_partial);
        CoactionMap back = action_to_coaction(a);
        CHECK(back.rho == c.rho);
        CHECK(classify_coaction(back).is_lax == w.is_lax);
        ++weak_total;
        weak_agree += w.is_weak == v.is_weak;
    }
    // not a theorem, only recorded
    MESSAGE("weak flag agreed on " << weak_agree << " of " << weak_total);

    // and from partial group actions to coactions of the dual group algebra
    for (const auto& p : {partial_z2_on_k2(Q()), partial_z3_on_k2(Q()), global_z2_on_k2(Q())}) {
        ActionMap a = group_to_kG(p);
        CoactionMap c = action_to_coaction(a);
        CHECK(classify_coaction(c).is_partial);
        CHECK(classify_coaction(c).is_global == classify_action(a).is_global);
        CHECK(coaction_to_action(c).kappa == a.kappa);
    }
}

TEST_CASE("smash product of the dual matches the opposite Koppinen ring") {
    DualSmashIso t = prop410_iso(trivial_coaction(truncated_polynomials(Q(), 2), kz2()));
    CHECK(t.checks.all_passed());
    // (a, j) -> j*n + a
    CHECK(t.alpha * unit_vec(Q(), 4, 1 * 2 + 0) == unit_vec(Q(), 4, 0 * 2 + 1));

    CoactionMap c = sweedler_on_k(Q(), q(1));
    DualSmashIso s = prop410_iso(c);
    CHECK(s.checks.all_passed());
    CHECK(s.smash.underline.dim() == s.koppinen.underline.dim());

    CoactionMap b = sweedler_on_b(Q());
    DualSmashIso sb = prop410_iso(b);
    CHECK(sb.checks.all_passed());
    std::mt19937 rng(5);
    std::size_t N = b.n() * b.m();
    for (int t = 0; t < 5; ++t) {
        Vec x = random_matrix(rng, Q(), N, 1, 1).column(0), y = random_matrix(rng, Q(), N, 1, 1).column(0);
        CHECK(sb.alpha * sb.smash.product.multiply(x, y) == opposite_koppinen(b, sb.alpha * x, sb.alpha * y));
    }
}

TEST_CASE("property: smash isomorphism on lax instances") {
    for (const auto& c : instances()) {
        DualSmashIso s = prop410_iso(c);
        CHECK(s.checks.all_passed());
        CHECK(verify(s.smash.product).passed("associativity"));
        CHECK(s.koppinen.underline.dim() == build_coring(c).underline_basis.dim());
    }
}
