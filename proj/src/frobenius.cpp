#include "hpa/frobenius.hpp"

#include "hpa/errors.hpp"
#include "hpa/tensor.hpp"

namespace hpa {

namespace {

// {x : b_i x = eps_i x for all i}
Subspace left_integrals(const AlgebraPresentation& alg, const Vec& eps) {
    Field f = alg.field();
    std::size_t m = alg.dim();
    Matrix sys(f, m * m, m);
    for (std::size_t i = 0; i < m; ++i) {
        Matrix block = alg.left_mult(unit_vec(f, m, i)) - Matrix::identity(f, m).scaled(eps[i]);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) sys(i * m + r, c) = block(r, c);
    }
    return kernel_basis(sys);
}

Scalar pair(const Vec& phi, const Vec& h) {
    Scalar s = Scalar::zero(h.front().field());
    for (std::size_t i = 0; i < h.size(); ++i) s.add_product(phi[i], h[i]);
    return s;
}

}  // namespace

IntegralSpace integrals(const HopfPresentation& h, IntegralSide side) {
    if (side == IntegralSide::left_in_h)
        return IntegralSpace{side, left_integrals(h.algebra(), h.coalgebra().counit())};
    BialgebraPresentation d = dual(h.bialgebra);
    return IntegralSpace{side, left_integrals(d.algebra, d.coalgebra.counit())};
}

FrobeniusData frobenius_pair(const HopfPresentation& h) {
    IntegralSpace ti = integrals(h, IntegralSide::left_in_h);
    IntegralSpace pi = integrals(h, IntegralSide::left_in_dual);
    if (ti.basis.dim() != 1) throw PreconditionError("integrals", "the space of left integrals in H is not one-dimensional");
    if (pi.basis.dim() != 1) throw PreconditionError("integrals", "the space of left integrals in H* is not one-dimensional");
    Matrix sb = h.inverse_antipode();
    Vec t = ti.basis.vector(0);
    Vec phi = pi.basis.vector(0);
    Scalar p = pair(phi, t);
    if (p.is_zero()) throw PreconditionError("pairing", "<phi, t> = 0");
    phi = p.inverse() * phi;

    Field f = h.field();
    std::size_t m = h.dim();
    const AlgebraPresentation& H = h.algebra();
    SparseVec dt = sparse(h.coalgebra().comultiply(t));
    AxiomReport checks;
    Vec lhs = zero_vec(f, m), rhs = zero_vec(f, m);
    for (const auto& term : dt) {
        std::size_t p1 = term.index / m, p2 = term.index % m;
        Vec s1 = sb.column(p1);
        axpy(lhs, term.coeff * phi[p2], s1);
        axpy(rhs, term.coeff * pair(phi, s1), unit_vec(f, m, p2));
    }
    checks.add("5.3.1a", first_violation({2}, {m}, [&](std::size_t side) {
                   return std::pair<Vec, Vec>{side == 0 ? lhs : rhs, H.unit()};
               }));
    checks.add("5.3.2", first_violation({m}, {m, m}, [&](std::size_t b) {
                   Vec hb = unit_vec(f, m, b);
                   Vec l = zero_vec(f, m * m), r = zero_vec(f, m * m);
                   for (const auto& term : dt) {
                       Vec t2 = unit_vec(f, m, term.index % m), s1 = sb.column(term.index / m);
                       axpy(l, term.coeff, tensor(t2, H.multiply(s1, hb)));
                       axpy(r, term.coeff, tensor(H.multiply(hb, t2), s1));
                   }
                   return std::pair<Vec, Vec>{l, r};
               }));
    return FrobeniusData{std::move(t), std::move(phi), std::move(p), std::move(sb), std::move(checks)};
}

EquationResult check_cocommutativity_534(const BialgebraPresentation& h, const Vec& t) {
    std::size_t m = h.dim();
    const Matrix& d = h.coalgebra.comult();
    Vec v = d * t;
    v = map_leg(v, {m, m}, 0, d);
    v = map_leg(v, {m, m, m}, 0, d);
    Vec w = permute_legs(v, {m, m, m, m}, {0, 2, 1, 3});
    auto bad = first_violation({1}, {m, m, m, m}, [&](std::size_t) { return std::pair<Vec, Vec>{v, w}; });
    Witness wit;
    if (bad) wit.assign(bad->begin() + 1, bad->end());
    return EquationResult{"5.3.4", !bad, std::move(wit)};
}

bool is_cocommutative_element(const BialgebraPresentation& h, const Vec& t) {
    std::size_t m = h.dim();
    Vec v = h.coalgebra.comult() * t;
    return v == permute_legs(v, {m, m}, {1, 0});
}

FrobeniusSystem build_frobenius_system(const ActionMap& a, const FrobeniusData& fd) {
    Field f = a.field();
    std::size_t n = a.n(), m = a.m();
    if (fd.t.size() != m || fd.phi.size() != m) throw DimensionError("frobenius data does not match the bialgebra");
    if (!classify_action(a).is_partial) throw PreconditionError("partial", "the action is not partial");
    const AlgebraPresentation& A = a.algebra;
    for (std::size_t h = 0; h < m; ++h) {
        Vec h1 = a.act(unit_vec(f, m, h), A.unit());
        if (!(A.left_mult(h1) == A.right_mult(h1)))
            throw PreconditionError("central", "h.1_A is not central for basis element " + std::to_string(h));
    }
    if (!check_cocommutativity_534(a.hopf, fd.t).passed)
        throw PreconditionError("5.3.4", "the integral does not satisfy 5.3.4");

    SmashData s = build_smash(a);
    const Subspace& U = s.underline;
    std::size_t u = U.dim();
    Matrix sel = U.coordinate_map();
    Bimodule ub;
    ub.dim = u;
    for (std::size_t b = 0; b < n; ++b) {
        ub.left.push_back(sel * s.left[b] * U.basis());
        ub.right.push_back(sel * s.right[b] * U.basis());
    }
    TensorOverSub uu = tensor_over(ub, ub);
    const AlgebraPresentation& ua = *s.underline_algebra;

    auto under = [&](const Vec& h) { return sel * (s.pi * tensor(A.unit(), h)); };  // (1#h)1_A
    Vec e_lift = zero_vec(f, u * u);
    for (const auto& term : sparse(a.hopf.coalgebra.comultiply(fd.t)))
        axpy(e_lift, term.coeff,
             tensor(under(unit_vec(f, m, term.index % m)), under(fd.s_bar.column(term.index / m))));
    Vec e = uu.project(e_lift);

    Matrix phi_row = Matrix::from_rows(f, m, {fd.phi});
    Matrix nu = kron(Matrix::identity(f, n), phi_row) * U.basis();

    AxiomReport rep;
    Vec el = uu.lift(e);
    rep.add("commute", first_violation({u}, {uu.dim()}, [&](std::size_t i) {
                Vec si = unit_vec(f, u, i);
                Vec l = uu.project(map_leg(el, {u, u}, 0, ua.left_mult(si)));
                Vec r = uu.project(map_leg(el, {u, u}, 1, ua.right_mult(si)));
                return std::pair<Vec, Vec>{l, r};
            }));
    rep.add("bimodule", first_violation({n, u}, {2, n}, [&](std::size_t idx) {
                std::size_t b = idx / u;
                Vec r = unit_vec(f, u, idx % u), eb = unit_vec(f, n, b);
                Vec lhs = nu * (ub.left[b] * r), l2 = nu * (ub.right[b] * r);
                lhs.insert(lhs.end(), l2.begin(), l2.end());
                Vec rhs = A.multiply(eb, nu * r), r2 = A.multiply(nu * r, eb);
                rhs.insert(rhs.end(), r2.begin(), r2.end());
                return std::pair<Vec, Vec>{lhs, rhs};
            }));
    Vec left_side = zero_vec(f, u), right_side = zero_vec(f, u);
    for (std::size_t i = 0; i < u; ++i)
        for (std::size_t j = 0; j < u; ++j) {
            const Scalar& c = el[i * u + j];
            if (c.is_zero()) continue;
            axpy(left_side, c, ub.left_action(nu.column(i)) * unit_vec(f, u, j));
            axpy(right_side, c, ub.right_action(nu.column(j)) * unit_vec(f, u, i));
        }
    rep.add("counit-like", first_violation({2}, {u}, [&](std::size_t side) {
                return std::pair<Vec, Vec>{side == 0 ? left_side : right_side, ua.unit()};
            }));
    return FrobeniusSystem{std::move(s), std::move(ub), std::move(uu), std::move(nu), std::move(e), std::move(rep)};
}

}  // namespace hpa
