#include "hpa/duality.hpp"

#include "hpa/errors.hpp"
#include "hpa/tensor.hpp"
#include "ring_laws.hpp"

namespace hpa {

Vec flatten_map(const Matrix& f) {
    Vec v;
    v.reserve(f.rows() * f.cols());
    for (std::size_t c = 0; c < f.cols(); ++c)
        for (std::size_t a = 0; a < f.rows(); ++a) v.push_back(f(a, c));
    return v;
}

Matrix unflatten_map(Field f, std::size_t n, std::size_t cols, const Vec& v) {
    if (v.size() != n * cols) throw DimensionError("unflatten_map: wrong length");
    Matrix m(f, n, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t a = 0; a < n; ++a) m(a, c) = v[c * n + a];
    return m;
}

Matrix DualRing::functional(const Vec& coords) const {
    return unflatten_map(space.field(), n, coring_dim, space.basis() * coords);
}

namespace {

Vec coords_or_throw(const Subspace& s, const Vec& v, const char* what) {
    auto c = s.coordinates(v);
    if (!c) throw InternalConsistencyError(what);
    return *c;
}

// The data needed to dualize a left unital coring X over A: bimodule
// actions on X, a representative of Delta(x) in X (x) X for each basis x,
// and the counit.
struct CoringInput {
    const AlgebraPresentation& A;
    std::size_t dim;
    const std::vector<Matrix>& left;
    const std::vector<Matrix>& right;
    Matrix lift;    // dim^2 x dim
    Matrix counit;  // n x dim
};

struct DualCore {
    Subspace space;
    AlgebraPresentation ring;
    std::vector<Matrix> left, right;
};

DualCore dualize(const CoringInput& in) {
    Field f = in.A.field();
    std::size_t n = in.A.dim(), d = in.dim, vars = n * d;

    // F x b = b F(x) for every basis b of A
    Matrix cons(f, n * vars, vars);
    for (std::size_t v = 0; v < vars; ++v) {
        Matrix F = unflatten_map(f, n, d, unit_vec(f, vars, v));
        for (std::size_t b = 0; b < n; ++b) {
            Vec r = flatten_map(F * in.left[b] - in.A.left_mult(unit_vec(f, n, b)) * F);
            for (std::size_t k = 0; k < vars; ++k) cons(b * vars + k, v) = r[k];
        }
    }
    Subspace space = kernel_basis(cons);
    std::size_t D = space.dim();
    std::vector<Matrix> fs;
    for (std::size_t i = 0; i < D; ++i) fs.push_back(unflatten_map(f, n, d, space.vector(i)));

    // (f#g) = g o T_f with T_f(x) = x_(1) f(x_(2))
    Matrix mult(f, D, D * D);
    for (std::size_t i = 0; i < D; ++i) {
        std::vector<Matrix> rq;
        for (std::size_t q = 0; q < d; ++q) {
            Matrix r(f, d, d);
            for (std::size_t b = 0; b < n; ++b)
                if (!fs[i](b, q).is_zero()) r = r + in.right[b].scaled(fs[i](b, q));
            rq.push_back(std::move(r));
        }
        Matrix t(f, d, d);
        for (std::size_t x = 0; x < d; ++x) {
            Vec col = zero_vec(f, d);
            for (std::size_t p = 0; p < d; ++p)
                for (std::size_t q = 0; q < d; ++q) {
                    const Scalar& s = in.lift(p * d + q, x);
                    if (!s.is_zero()) axpy(col, s, rq[q].column(p));
                }
            t.set_column(x, col);
        }
        for (std::size_t j = 0; j < D; ++j) {
            Vec c = coords_or_throw(space, flatten_map(fs[j] * t), "dual product leaves *C");
            for (std::size_t k = 0; k < D; ++k) mult(k, i * D + j) = c[k];
        }
    }
    Vec unit = coords_or_throw(space, flatten_map(in.counit), "counit is not left A-linear");
    AlgebraPresentation ring({}, std::move(mult), unit);

    std::vector<Matrix> left, right;
    for (std::size_t a = 0; a < n; ++a) {
        Matrix ra = in.A.right_mult(unit_vec(f, n, a));
        left.push_back(matrix_of(f, D, D, [&](std::size_t i) {
            return coords_or_throw(space, flatten_map(fs[i] * in.right[a]), "*C is not a left module");
        }));
        right.push_back(matrix_of(f, D, D, [&](std::size_t i) {
            return coords_or_throw(space, flatten_map(ra * fs[i]), "*C is not a right module");
        }));
    }
    return DualCore{std::move(space), std::move(ring), std::move(left), std::move(right)};
}

Matrix action_of(const std::vector<Matrix>& acts, const Vec& a) {
    Matrix r(acts.front().field(), acts.front().rows(), acts.front().cols());
    for (std::size_t i = 0; i < acts.size(); ++i)
        if (!a[i].is_zero()) r = r + acts[i].scaled(a[i]);
    return r;
}

}  // namespace

DualRing dual_ring_of_coring(const CoringData& d, CounitChoice counit) {
    auto v = classify_coaction(d.coaction);
    if (!v.is_lax && !v.is_weak) throw PreconditionError("lax", "the coaction is neither lax nor weak");
    const AlgebraPresentation& A = d.coaction.algebra;
    Field f = A.field();
    std::size_t n = A.dim(), N = d.module.dim;

    Matrix lift = matrix_of(f, N * N, N, [&](std::size_t c) { return d.cc.lift(d.delta_q.column(c)); });
    const Matrix& eps = counit == CounitChoice::plain ? d.eps : d.eps_underline;
    DualCore full = dualize(CoringInput{A, N, d.module.left, d.module.right, lift, eps});

    // C1_A in its own coordinates; Delta lands in C1_A (x)_A C1_A after pi on both legs
    const Subspace& u = d.underline_basis;
    std::size_t U = u.dim();
    Bimodule ub = underline_bimodule(d);
    Matrix pt = u.coordinate_map() * d.pi;
    Matrix ulift = matrix_of(f, U * U, U, [&](std::size_t k) {
        Vec x = lift * u.vector(k);
        return map_leg(map_leg(x, {N, N}, 0, pt), {U, N}, 1, pt);
    });
    DualCore under = dualize(CoringInput{A, U, ub.left, ub.right, ulift, eps * u.basis()});

    Matrix by_one = action_of(full.left, A.unit());
    Subspace unital = Subspace::column_space(by_one);
    Matrix alpha = matrix_of(f, under.space.dim(), unital.dim(), [&](std::size_t i) {
        Matrix F = unflatten_map(f, n, N, full.space.basis() * unital.vector(i));
        return coords_or_throw(under.space, flatten_map(F * u.basis()), "restriction is not left A-linear");
    });
    Matrix beta = matrix_of(f, unital.dim(), under.space.dim(), [&](std::size_t i) {
        Matrix G = unflatten_map(f, n, U, under.space.vector(i));
        Vec c = coords_or_throw(full.space, flatten_map(G * pt), "g(- 1_A) is not left A-linear");
        return coords_or_throw(unital, c, "g(- 1_A) does not lie in 1_A *C");
    });
    return DualRing{n,
                    N,
                    std::move(full.space),
                    std::move(full.ring),
                    std::move(full.left),
                    std::move(full.right),
                    std::move(by_one),
                    std::move(unital),
                    std::move(under.space),
                    std::move(under.ring),
                    std::move(alpha),
                    std::move(beta)};
}

AxiomReport verify_dual_ring(const DualRing& r, RingMode mode) {
    std::size_t D = r.ring.dim(), n = r.n;
    const Vec& unit = r.ring.unit();
    Matrix whole = Matrix::identity(r.space.field(), D);

    AxiomReport rep;
    rep.add("1.3.1", detail::associativity(r.ring, whole));
    rep.add("eta-bimodule", first_violation({n}, {D}, [&](std::size_t a) {
                return std::pair<Vec, Vec>{r.left[a] * unit, r.right[a] * unit};
            }));
    switch (mode) {
    case RingMode::full:
        rep.add("1.3.2", detail::unit_law(r.ring, unit, whole, [](const Vec& x) { return x; }));
        break;
    case RingMode::weak:
        rep.add("1.4.2", detail::unit_law(r.ring, unit, whole, [&](const Vec& x) { return r.pi * x; }));
        break;
    case RingMode::lax:
        rep.add("1.4.1", detail::unit_law(r.ring, unit, r.unital.basis(), [](const Vec& x) { return x; }));
        break;
    }
    return rep;
}

AxiomReport verify_unital_iso(const DualRing& r) {
    Field f = r.space.field();
    std::size_t k = r.unital.dim();
    AxiomReport rep;
    rep.add_flag("dims", k == r.underline_space.dim());
    if (k != r.underline_space.dim()) return rep;
    rep.add_flag("alpha-beta-identity", r.alpha * r.beta == Matrix::identity(f, k));
    rep.add_flag("beta-alpha-identity", r.beta * r.alpha == Matrix::identity(f, k));
    const Matrix& ub = r.unital.basis();
    rep.add("alpha-multiplicative", first_violation({k, k}, {k}, [&](std::size_t idx) {
                Vec x = ub.column(idx / k), y = ub.column(idx % k);
                Vec xy = coords_or_throw(r.unital, r.ring.multiply(x, y), "1_A *C is not closed");
                return std::pair<Vec, Vec>{r.alpha * xy, r.underline_ring.multiply(r.alpha.column(idx / k),
                                                                                   r.alpha.column(idx % k))};
            }));
    Vec u = coords_or_throw(r.unital, r.pi * r.ring.unit(), "1_A eps lies outside 1_A *C");
    rep.add_flag("alpha-unit", r.alpha * u == r.underline_ring.unit());
    return rep;
}

// Koppinen smash product on Hom(H, A)

KoppinenSmash build_koppinen(const CoactionMap& c) {
    auto v = classify_coaction(c);
    if (!v.is_lax && !v.is_weak) throw PreconditionError("lax", "the coaction is neither lax nor weak");
    const AlgebraPresentation& A = c.algebra;
    const AlgebraPresentation& H = c.hopf.algebra;
    const CoalgebraPresentation& C = c.hopf.coalgebra;
    Field f = c.field();
    std::size_t n = c.n(), m = c.m(), N = n * m;
    auto ea = [&](std::size_t i) { return unit_vec(f, n, i); };
    std::vector<SparseVec> rho;  // rho(b_a) as (b, s) pairs at b*m + s
    for (std::size_t a = 0; a < n; ++a) rho.push_back(sparse(c.rho.column(a)));

    Matrix mult(f, N, N * N);
    for (std::size_t i = 0; i < N; ++i) {
        std::size_t j1 = i / n, a1 = i % n;
        for (std::size_t k = 0; k < N; ++k) {
            std::size_t j2 = k / n, a2 = k % n;
            Vec r = zero_vec(f, N);
            for (std::size_t l = 0; l < m; ++l)
                for (const auto& t : C.coproduct(l)) {
                    if (t.index % m != j1) continue;
                    std::size_t p = t.index / m;
                    for (const auto& x : rho[a1]) {
                        Scalar s = H.mu(p, x.index % m, j2);
                        if (s.is_zero()) continue;
                        s *= t.coeff * x.coeff;
                        Vec prod = A.multiply(ea(x.index / m), ea(a2));
                        for (std::size_t b = 0; b < n; ++b)
                            if (!prod[b].is_zero()) r[l * n + b] += s * prod[b];
                    }
                }
            for (std::size_t q = 0; q < N; ++q) mult(q, i * N + k) = r[q];
        }
    }

    const Vec& eps = C.counit();
    Matrix eta(f, N, n);
    std::vector<Matrix> left, right;
    for (std::size_t a = 0; a < n; ++a) {
        Matrix la(f, N, N);
        for (const auto& x : rho[a]) {
            std::size_t b = x.index / m, s = x.index % m;
            for (std::size_t l = 0; l < m; ++l)
                for (std::size_t k = 0; k < m; ++k) {
                    Scalar w = H.mu(l, s, k);
                    if (w.is_zero()) continue;
                    w *= x.coeff;
                    eta(l * n + b, a) += w * eps[k];
                    // (a f)(h_l) gets w b f(h_k)
                    for (std::size_t a2 = 0; a2 < n; ++a2) {
                        Vec prod = A.multiply(ea(b), ea(a2));
                        for (std::size_t q = 0; q < n; ++q)
                            if (!prod[q].is_zero()) la(l * n + q, k * n + a2) += w * prod[q];
                    }
                }
        }
        left.push_back(std::move(la));
        right.push_back(kron(Matrix::identity(f, m), A.right_mult(ea(a))));
    }
    Vec unit = eta * A.unit();
    AlgebraPresentation product({}, std::move(mult), unit);

    // f(h) = 1_[0] f(h 1_[1]) is f = 1_A f
    Matrix by_one = action_of(left, A.unit());
    Subspace under = kernel_basis(by_one - Matrix::identity(f, N));

    AxiomReport checks;
    bool closed = true;
    for (std::size_t i = 0; i < under.dim() && closed; ++i)
        for (std::size_t j = 0; j < under.dim() && closed; ++j)
            closed = under.contains(product.multiply(under.vector(i), under.vector(j)));
    checks.add_flag("underline-closed", closed);
    checks.add_flag("unit-in-underline", under.contains(unit));

    // *C -> Hom(H, A), F -> (h -> F(1 (x) h))
    DualRing dr = dual_ring_of_coring(build_coring(c));
    std::size_t D = dr.ring.dim();
    Matrix phi = matrix_of(f, N, D, [&](std::size_t i) {
        Matrix F = dr.functional(unit_vec(f, D, i));
        Vec out;
        for (std::size_t j = 0; j < m; ++j) {
            Vec col = F * tensor(A.unit(), unit_vec(f, m, j));
            out.insert(out.end(), col.begin(), col.end());
        }
        return out;
    });
    checks.add_flag("phi-bijective", D == N && rank(phi) == N);
    checks.add("phi-multiplicative", first_violation({D, D}, {N}, [&](std::size_t idx) {
                   Vec x = unit_vec(f, D, idx / D), y = unit_vec(f, D, idx % D);
                   return std::pair<Vec, Vec>{phi * dr.ring.multiply(x, y), product.multiply(phi * x, phi * y)};
               }));
    checks.add_flag("phi-unit", phi * dr.ring.unit() == unit);
    return KoppinenSmash{c,
                         std::move(product),
                         std::move(eta),
                         std::move(under),
                         std::move(left),
                         std::move(right),
                         std::move(phi),
                         std::move(checks)};
}

// Transfer between coactions and actions of the dual

ActionMap coaction_to_action(const CoactionMap& c) {
    std::size_t n = c.n(), m = c.m();
    Matrix kappa(c.field(), n, m * n);
    for (std::size_t a0 = 0; a0 < n; ++a0)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t a = 0; a < n; ++a) kappa(a0, i * n + a) = c.rho(a0 * m + i, a);
    return ActionMap(op(c.algebra), cop(dual(c.hopf)), std::move(kappa));
}

CoactionMap action_to_coaction(const ActionMap& a) {
    std::size_t n = a.n(), m = a.m();
    Matrix rho(a.field(), n * m, n);
    for (std::size_t a0 = 0; a0 < n; ++a0)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t b = 0; b < n; ++b) rho(a0 * m + i, b) = a.kappa(a0, i * n + b);
    return CoactionMap(op(a.algebra), dual(cop(a.hopf)), std::move(rho));
}

bool dual_basis_identity(const BialgebraPresentation& h) {
    BialgebraPresentation d = dual(h);
    std::size_t m = h.dim();
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
            for (std::size_t k = 0; k < m; ++k)
                if (!(h.coalgebra.delta(k, p, q) == d.algebra.mu(p, q, k))) return false;
    return true;
}

DualSmashIso prop410_iso(const CoactionMap& c) {
    if (!classify_coaction(c).is_lax) throw PreconditionError("lax", "the coaction is not lax");
    Field f = c.field();
    std::size_t n = c.n(), m = c.m(), N = n * m;
    SmashData smash = build_smash(coaction_to_action(c));
    KoppinenSmash kop = build_koppinen(c);
    Matrix alpha(f, N, N);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < m; ++j) alpha(j * n + a, a * m + j) = Scalar::one(f);

    AxiomReport checks;
    checks.add_flag("alpha-bijective", rank(alpha) == N);
    // the opposite Koppinen product f . g = g # f
    checks.add("alpha-multiplicative", first_violation({N, N}, {N}, [&](std::size_t idx) {
                   Vec x = unit_vec(f, N, idx / N), y = unit_vec(f, N, idx % N);
                   return std::pair<Vec, Vec>{alpha * smash.product.multiply(x, y),
                                              kop.product.multiply(alpha * y, alpha * x)};
               }));
    Subspace image = Subspace::column_space(alpha * smash.underline.basis());
    checks.add_flag("underline-image", image == kop.underline);
    checks.add_flag("underline-unit", alpha * (smash.eta_underline * smash.action.algebra.unit()) ==
                                          kop.eta * c.algebra.unit());
    return DualSmashIso{std::move(smash), std::move(kop), std::move(alpha), std::move(checks)};
}

}  // namespace hpa
