#include "hpa/presentations.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "hpa/errors.hpp"
#include "hpa/tensor.hpp"

namespace hpa {

namespace {

std::vector<std::string> default_labels(std::vector<std::string> labels, std::size_t n, const char* stem) {
    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i) labels.push_back(stem + std::to_string(i));
    if (labels.size() != n) throw DimensionError("basis label count does not match dimension");
    return labels;
}

void require_field(const Vec& v, Field f, const char* what) {
    for (const auto& s : v)
        if (!(s.field() == f)) throw FieldMismatch(std::string(what) + " has entries in the wrong field");
}

}  // namespace

SparseVec sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.push_back({i, v[i]});
    return s;
}

AlgebraPresentation::AlgebraPresentation(std::vector<std::string> labels, Matrix mult, Vec unit)
    : labels_(default_labels(std::move(labels), mult.rows(), "b")), mult_(std::move(mult)), unit_(std::move(unit)) {
    std::size_t n = labels_.size();
    if (mult_.cols() != n * n) throw DimensionError("multiplication tensor must be n x n^2");
    if (unit_.size() != n) throw DimensionError("unit vector length must equal the dimension");
    require_field(unit_, field(), "unit");
    products_.reserve(n * n);
    for (std::size_t c = 0; c < n * n; ++c) products_.push_back(sparse(mult_.column(c)));
}

AlgebraPresentation AlgebraPresentation::from_tensor(
    Field f, std::vector<std::string> labels,
    const std::function<Scalar(std::size_t, std::size_t, std::size_t)>& mu, Vec unit) {
    std::size_t n = unit.size();
    Matrix m(f, n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(k, i * n + j) = mu(i, j, k);
    return AlgebraPresentation(std::move(labels), std::move(m), std::move(unit));
}

Vec AlgebraPresentation::multiply(const Vec& a, const Vec& b) const {
    std::size_t n = dim();
    if (a.size() != n || b.size() != n) throw DimensionError("multiply: vector length mismatch");
    Vec r = zero_vec(field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            Scalar ab = a[i] * b[j];
            for (const auto& t : products_[i * n + j]) r[t.index].add_product(ab, t.coeff);
        }
    }
    return r;
}

Matrix AlgebraPresentation::left_mult(const Vec& a) const {
    return matrix_of(field(), dim(), dim(), [&](std::size_t j) { return multiply(a, unit_vec(field(), dim(), j)); });
}

Matrix AlgebraPresentation::right_mult(const Vec& a) const {
    return matrix_of(field(), dim(), dim(), [&](std::size_t j) { return multiply(unit_vec(field(), dim(), j), a); });
}

CoalgebraPresentation::CoalgebraPresentation(std::vector<std::string> labels, Matrix comult, Vec counit)
    : labels_(default_labels(std::move(labels), comult.cols(), "h")), comult_(std::move(comult)), counit_(std::move(counit)) {
    std::size_t m = labels_.size();
    if (comult_.rows() != m * m) throw DimensionError("comultiplication tensor must be m^2 x m");
    if (counit_.size() != m) throw DimensionError("counit length must equal the dimension");
    require_field(counit_, field(), "counit");
    for (std::size_t i = 0; i < m; ++i) coproducts_.push_back(sparse(comult_.column(i)));
}

Scalar CoalgebraPresentation::epsilon(const Vec& h) const {
    if (h.size() != dim()) throw DimensionError("counit: vector length mismatch");
    Scalar s = Scalar::zero(field());
    for (std::size_t i = 0; i < h.size(); ++i) s.add_product(counit_[i], h[i]);
    return s;
}

Matrix CoalgebraPresentation::counit_row() const {
    return Matrix::from_rows(field(), dim(), {counit_});
}

BialgebraPresentation::BialgebraPresentation(AlgebraPresentation a, CoalgebraPresentation c)
    : algebra(std::move(a)), coalgebra(std::move(c)) {
    if (algebra.dim() != coalgebra.dim()) throw DimensionError("algebra and coalgebra dimensions differ");
    if (!(algebra.field() == coalgebra.field())) throw FieldMismatch("algebra and coalgebra fields differ");
}

Matrix HopfPresentation::inverse_antipode() const {
    if (antipode_inverse) return *antipode_inverse;
    auto inv = inverse(antipode);
    if (!inv) throw PreconditionError("antipode-invertible", "the antipode is not invertible");
    return *inv;
}

Vec multiply_in_tensor(const std::vector<const AlgebraPresentation*>& factors, const Vec& x, const Vec& y) {
    Dims dims;
    for (auto* a : factors) dims.push_back(a->dim());
    std::size_t total = volume(dims);
    if (x.size() != total || y.size() != total) throw DimensionError("tensor product: vector length mismatch");
    Field f = factors.front()->field();
    Vec r = zero_vec(f, total);
    SparseVec sx = sparse(x), sy = sparse(y);
    std::size_t r_count = factors.size();
    for (const auto& tx : sx) {
        auto ix = unflatten(tx.index, dims);
        for (const auto& ty : sy) {
            auto iy = unflatten(ty.index, dims);
            // expand the product leg by leg
            std::vector<std::pair<std::size_t, Scalar>> partial{{0, tx.coeff * ty.coeff}};
            for (std::size_t k = 0; k < r_count && !partial.empty(); ++k) {
                const auto& terms = factors[k]->product(ix[k], iy[k]);
                std::vector<std::pair<std::size_t, Scalar>> next;
                next.reserve(partial.size() * terms.size());
                for (const auto& [idx, c] : partial)
                    for (const auto& t : terms) next.emplace_back(idx * dims[k] + t.index, c * t.coeff);
                partial = std::move(next);
            }
            for (const auto& [idx, c] : partial) r[idx] += c;
        }
    }
    return r;
}

AxiomReport verify(const AlgebraPresentation& a) {
    AxiomReport rep;
    std::size_t n = a.dim();
    Field f = a.field();
    auto e = [&](std::size_t i) { return unit_vec(f, n, i); };
    rep.add("associativity", first_violation({n, n, n}, {n}, [&](std::size_t idx) {
                auto ix = unflatten(idx, {n, n, n});
                Vec lhs = a.multiply(a.multiply(e(ix[0]), e(ix[1])), e(ix[2]));
                Vec rhs = a.multiply(e(ix[0]), a.multiply(e(ix[1]), e(ix[2])));
                return std::make_pair(lhs, rhs);
            }));
    rep.add("unit-left", first_violation({n}, {n}, [&](std::size_t i) {
                return std::make_pair(a.multiply(a.unit(), e(i)), e(i));
            }));
    rep.add("unit-right", first_violation({n}, {n}, [&](std::size_t i) {
                return std::make_pair(a.multiply(e(i), a.unit()), e(i));
            }));
    return rep;
}

AxiomReport verify(const CoalgebraPresentation& c) {
    AxiomReport rep;
    std::size_t m = c.dim();
    Field f = c.field();
    const Matrix& d = c.comult();
    Matrix eps = c.counit_row();
    rep.add("coassociativity", first_violation({m}, {m, m, m}, [&](std::size_t i) {
                Vec di = d.column(i);
                return std::make_pair(map_leg(di, {m, m}, 0, d), map_leg(di, {m, m}, 1, d));
            }));
    rep.add("counit-left", first_violation({m}, {m}, [&](std::size_t i) {
                return std::make_pair(map_leg(d.column(i), {m, m}, 0, eps), unit_vec(f, m, i));
            }));
    rep.add("counit-right", first_violation({m}, {m}, [&](std::size_t i) {
                return std::make_pair(map_leg(d.column(i), {m, m}, 1, eps), unit_vec(f, m, i));
            }));
    return rep;
}

AxiomReport verify(const BialgebraPresentation& b) {
    AxiomReport rep = verify(b.algebra);
    rep.append(verify(b.coalgebra));
    std::size_t m = b.dim();
    Field f = b.field();
    const auto& A = b.algebra;
    const auto& C = b.coalgebra;
    auto e = [&](std::size_t i) { return unit_vec(f, m, i); };
    rep.add("comult-multiplicative", first_violation({m, m}, {m, m}, [&](std::size_t idx) {
                std::size_t i = idx / m, j = idx % m;
                Vec lhs = C.comultiply(A.multiply(e(i), e(j)));
                Vec rhs = multiply_in_tensor({&A, &A}, C.comultiply(e(i)), C.comultiply(e(j)));
                return std::make_pair(lhs, rhs);
            }));
    rep.add("counit-multiplicative", first_violation({m, m}, {1}, [&](std::size_t idx) {
                std::size_t i = idx / m, j = idx % m;
                Vec lhs{C.epsilon(A.multiply(e(i), e(j)))};
                Vec rhs{C.counit()[i] * C.counit()[j]};
                return std::make_pair(lhs, rhs);
            }));
    rep.add("comult-unit", first_violation({1}, {m, m}, [&](std::size_t) {
                return std::make_pair(C.comultiply(A.unit()), tensor(A.unit(), A.unit()));
            }));
    rep.add("counit-unit", first_violation({1}, {1}, [&](std::size_t) {
                return std::make_pair(Vec{C.epsilon(A.unit())}, Vec{Scalar::one(f)});
            }));
    return rep;
}

namespace {

// Sum S(h_(1)) h_(2) (left) or h_(1) S(h_(2)) (right) for a basis element.
Vec antipode_convolution(const BialgebraPresentation& b, const Matrix& s, std::size_t i, bool left) {
    std::size_t m = b.dim();
    Field f = b.field();
    Vec r = zero_vec(f, m);
    for (const auto& t : b.coalgebra.coproduct(i)) {
        std::size_t j = t.index / m, k = t.index % m;
        Vec x = left ? b.algebra.multiply(s.column(j), unit_vec(f, m, k))
                     : b.algebra.multiply(unit_vec(f, m, j), s.column(k));
        axpy(r, t.coeff, x);
    }
    return r;
}

}  // namespace

AxiomReport verify(const HopfPresentation& h) {
    AxiomReport rep = verify(h.bialgebra);
    std::size_t m = h.dim();
    Field f = h.field();
    if (h.antipode.rows() != m || h.antipode.cols() != m) throw DimensionError("antipode must be m x m");
    const auto& B = h.bialgebra;
    auto target = [&](std::size_t i) { return h.coalgebra().counit()[i] * B.algebra.unit(); };
    rep.add("antipode-left", first_violation({m}, {m}, [&](std::size_t i) {
                return std::make_pair(antipode_convolution(B, h.antipode, i, true), target(i));
            }));
    rep.add("antipode-right", first_violation({m}, {m}, [&](std::size_t i) {
                return std::make_pair(antipode_convolution(B, h.antipode, i, false), target(i));
            }));
    if (h.antipode_inverse) {
        Matrix id = Matrix::identity(f, m);
        Matrix p1 = h.antipode * *h.antipode_inverse;
        Matrix p2 = *h.antipode_inverse * h.antipode;
        rep.add("antipode-inverse", first_violation({m}, {m}, [&](std::size_t j) {
                    return std::make_pair(p1.column(j) + p2.column(j), id.column(j) + id.column(j));
                }));
    }
    return rep;
}

std::optional<Matrix> solve_antipode(const BialgebraPresentation& b) {
    std::size_t m = b.dim();
    Field f = b.field();
    const auto& A = b.algebra;
    // unknown S(l, j) sits at l*m + j
    Matrix sys(f, 2 * m * m, m * m);
    Vec rhs = zero_vec(f, 2 * m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (const auto& t : b.coalgebra.coproduct(i)) {
            std::size_t j = t.index / m, k = t.index % m;
            for (std::size_t l = 0; l < m; ++l) {
                for (const auto& p : A.product(l, k)) sys(i * m + p.index, l * m + j).add_product(t.coeff, p.coeff);
                for (const auto& p : A.product(j, l))
                    sys(m * m + i * m + p.index, l * m + k).add_product(t.coeff, p.coeff);
            }
        }
        for (std::size_t r = 0; r < m; ++r) {
            rhs[i * m + r] = b.coalgebra.counit()[i] * A.unit()[r];
            rhs[m * m + i * m + r] = rhs[i * m + r];
        }
    }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    Matrix s(f, m, m);
    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t j = 0; j < m; ++j) s(l, j) = (*sol)[l * m + j];
    return s;
}

HopfPresentation make_hopf(BialgebraPresentation b) {
    auto s = solve_antipode(b);
    if (!s) throw PreconditionError("antipode", "the bialgebra has no antipode");
    auto inv = inverse(*s);
    return HopfPresentation{std::move(b), *s, inv};
}

std::size_t GroupTable::identity() const {
    for (std::size_t e = 0; e < order(); ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < order() && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
        if (ok) return e;
    }
    throw InputError("group table has no identity");
}

std::size_t GroupTable::inverse(std::size_t i) const {
    std::size_t e = identity();
    for (std::size_t j = 0; j < order(); ++j)
        if (table[i][j] == e) return j;
    throw InputError("group element without inverse");
}

GroupTable make_group_table(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names) {
    std::size_t n = table.size();
    if (n == 0) throw InputError("empty group table");
    for (const auto& row : table) {
        if (row.size() != n) throw InputError("group table is not square");
        for (auto x : row)
            if (x >= n) throw InputError("group table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw InputError("group table is not associative at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    if (names.size() != n) throw InputError("group element name count mismatch");
    GroupTable g{std::move(table), std::move(names)};
    std::size_t e = g.identity();
    for (std::size_t a = 0; a < n; ++a) {
        bool left = false, right = false;
        for (std::size_t b = 0; b < n; ++b) {
            left = left || g.table[b][a] == e;
            right = right || g.table[a][b] == e;
        }
        if (!left || !right) throw InputError("group element " + std::to_string(a) + " has no inverse");
    }
    return g;
}

GroupTable cyclic_group(std::size_t n) {
    if (n == 0) throw InputError("cyclic group of order 0");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    }
    return make_group_table(std::move(t), std::move(names));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
    std::size_t a = g.order(), b = h.order();
    std::vector<std::vector<std::size_t>> t(a * b, std::vector<std::size_t>(a * b));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < a * b; ++i) {
        names.push_back("(" + g.names[i / b] + "," + h.names[i % b] + ")");
        for (std::size_t j = 0; j < a * b; ++j)
            t[i][j] = g.mul(i / b, j / b) * b + h.mul(i % b, j % b);
    }
    return make_group_table(std::move(t), std::move(names));
}

GroupTable group_from_permutations(const std::vector<std::vector<std::size_t>>& generators) {
    if (generators.empty()) throw InputError("no generators");
    std::size_t k = generators[0].size();
    std::vector<std::size_t> id(k);
    for (std::size_t i = 0; i < k; ++i) id[i] = i;
    auto compose = [](const std::vector<std::size_t>& s, const std::vector<std::size_t>& t) {
        std::vector<std::size_t> r(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) r[i] = s[t[i]];
        return r;
    };
    std::vector<std::vector<std::size_t>> elems{id};
    std::map<std::vector<std::size_t>, std::size_t> index{{id, 0}};
    std::deque<std::size_t> todo{0};
    while (!todo.empty()) {
        std::size_t cur = todo.front();
        todo.pop_front();
        for (const auto& gen : generators) {
            auto p = compose(gen, elems[cur]);
            if (index.emplace(p, elems.size()).second) {
                elems.push_back(p);
                todo.push_back(elems.size() - 1);
            }
        }
    }
    std::size_t n = elems.size();
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        std::string s = "[";
        for (std::size_t x = 0; x < k; ++x) s += (x ? "," : "") + std::to_string(elems[i][x]);
        names.push_back(s + "]");
        for (std::size_t j = 0; j < n; ++j) t[i][j] = index.at(compose(elems[i], elems[j]));
    }
    return make_group_table(std::move(t), std::move(names));
}

GroupTable symmetric_group3() { return group_from_permutations({{1, 0, 2}, {1, 2, 0}}); }

GroupTable dihedral_group(std::size_t n) {
    std::vector<std::size_t> r(n), s(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = (i + 1) % n;
        s[i] = (n - i) % n;
    }
    return group_from_permutations({r, s});
}

GroupTable quaternion_group() {
    // element index = 4*sign + unit, units 1,i,j,k
    static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    static const std::size_t unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const char* unit_name[4] = {"1", "i", "j", "k"};
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < 8; ++a) {
        names.push_back(std::string(a >= 4 ? "-" : "") + unit_name[a % 4]);
        for (std::size_t b = 0; b < 8; ++b) {
            std::size_t u = a % 4, v = b % 4;
            std::size_t sign = (a / 4 + b / 4 + static_cast<std::size_t>(unit_sign[u][v])) % 2;
            t[a][b] = sign * 4 + unit_prod[u][v];
        }
    }
    return make_group_table(std::move(t), std::move(names));
}

std::vector<GroupTable> small_groups(std::size_t max_order) {
    if (max_order > 8) throw InputError("small group catalogue stops at order 8");
    std::vector<GroupTable> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
        out.push_back(cyclic_group(n));
        if (n == 4) out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
        if (n == 6) out.push_back(symmetric_group3());
        if (n == 8) {
            out.push_back(direct_product(cyclic_group(4), cyclic_group(2)));
            out.push_back(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)));
            out.push_back(dihedral_group(4));
            out.push_back(quaternion_group());
        }
    }
    return out;
}

HopfPresentation group_algebra(const GroupTable& g, Field f) {
    std::size_t n = g.order();
    Matrix mult(f, n, n * n);
    Matrix comult(f, n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        comult(i * n + i, i) = Scalar::one(f);
        for (std::size_t j = 0; j < n; ++j) mult(g.mul(i, j), i * n + j) = Scalar::one(f);
    }
    Vec unit = unit_vec(f, n, g.identity());
    Vec counit(n, Scalar::one(f));
    HopfPresentation h = make_hopf(BialgebraPresentation(AlgebraPresentation(g.names, mult, unit),
                                                         CoalgebraPresentation(g.names, comult, counit)));
    for (std::size_t i = 0; i < n; ++i)
        if (!(h.antipode.column(i) == unit_vec(f, n, g.inverse(i))))
            throw InternalConsistencyError("solved group-algebra antipode is not inversion");
    return h;
}

HopfPresentation build_sweedler4(Field f) {
    if (f.characteristic() == 2) throw PreconditionError("char-not-2", "Sweedler's algebra needs characteristic != 2");
    // basis index = a + 2b for c^a x^b, i.e. {1, c, x, cx}
    std::vector<std::string> labels{"1", "c", "x", "cx"};
    auto mu = [&](std::size_t i, std::size_t j, std::size_t k) {
        std::size_t a = i % 2, b = i / 2, a2 = j % 2, b2 = j / 2;
        if (b + b2 >= 2) return Scalar::zero(f);
        std::size_t target = (a + a2) % 2 + 2 * (b + b2);
        if (target != k) return Scalar::zero(f);
        return Scalar::from_int(f, (b * a2) % 2 ? -1 : 1);
    };
    AlgebraPresentation alg = AlgebraPresentation::from_tensor(f, labels, mu, unit_vec(f, 4, 0));
    auto e = [&](std::size_t i) { return unit_vec(f, 4, i); };
    Vec d1 = tensor(e(0), e(0));
    Vec dc = tensor(e(1), e(1));
    Vec dx = tensor(e(1), e(2)) + tensor(e(2), e(0));
    Vec dcx = multiply_in_tensor({&alg, &alg}, dc, dx);
    Matrix comult = Matrix::from_columns(f, 16, {d1, dc, dx, dcx});
    Vec counit{Scalar::one(f), Scalar::one(f), Scalar::zero(f), Scalar::zero(f)};
    return make_hopf(BialgebraPresentation(alg, CoalgebraPresentation(labels, comult, counit)));
}

std::optional<GroupTable> group_of_grouplikes(const BialgebraPresentation& b) {
    std::size_t n = b.dim();
    Field f = b.field();
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = unit_vec(f, n, i);
        if (!(b.coalgebra.comultiply(ei) == tensor(ei, ei)) || !b.coalgebra.counit()[i].is_one()) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& p = b.algebra.product(i, j);
            if (p.size() != 1 || !p[0].coeff.is_one()) return std::nullopt;
            t[i][j] = p[0].index;
        }
    }
    try {
        return make_group_table(std::move(t), b.algebra.labels());
    } catch (const InputError&) {
        return std::nullopt;
    }
}

AlgebraPresentation op(const AlgebraPresentation& a) {
    std::size_t n = a.dim();
    Matrix m(a.field(), n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(k, i * n + j) = a.mult()(k, j * n + i);
    return AlgebraPresentation(a.labels(), std::move(m), a.unit());
}

CoalgebraPresentation cop(const CoalgebraPresentation& c) {
    std::size_t m = c.dim();
    Matrix d(c.field(), m * m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) d(j * m + k, i) = c.comult()(k * m + j, i);
    return CoalgebraPresentation(c.labels(), std::move(d), c.counit());
}

BialgebraPresentation dual(const BialgebraPresentation& b) {
    std::vector<std::string> labels;
    for (const auto& l : b.algebra.labels()) labels.push_back(l + "*");
    AlgebraPresentation alg(labels, b.coalgebra.comult().transpose(), b.coalgebra.counit());
    CoalgebraPresentation coalg(labels, b.algebra.mult().transpose(), b.algebra.unit());
    return BialgebraPresentation(std::move(alg), std::move(coalg));
}

BialgebraPresentation op(const BialgebraPresentation& b) { return BialgebraPresentation(op(b.algebra), b.coalgebra); }
BialgebraPresentation cop(const BialgebraPresentation& b) { return BialgebraPresentation(b.algebra, cop(b.coalgebra)); }

HopfPresentation dual_hopf(const HopfPresentation& h) {
    std::optional<Matrix> inv;
    if (h.antipode_inverse) inv = h.antipode_inverse->transpose();
    return HopfPresentation{dual(h.bialgebra), h.antipode.transpose(), inv};
}

HopfPresentation op(const HopfPresentation& h) {
    return HopfPresentation{op(h.bialgebra), h.inverse_antipode(), h.antipode};
}

HopfPresentation cop(const HopfPresentation& h) {
    return HopfPresentation{cop(h.bialgebra), h.inverse_antipode(), h.antipode};
}

AlgebraPresentation ground_algebra(Field f) {
    return AlgebraPresentation({"1"}, Matrix::identity(f, 1), unit_vec(f, 1, 0));
}

AlgebraPresentation diagonal_algebra(Field f, std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    Vec unit(n, Scalar::one(f));
    return AlgebraPresentation::from_tensor(
        f, labels,
        [&](std::size_t i, std::size_t j, std::size_t k) {
            return (i == j && j == k) ? Scalar::one(f) : Scalar::zero(f);
        },
        unit);
}

AlgebraPresentation truncated_polynomials(Field f, std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    return AlgebraPresentation::from_tensor(
        f, labels,
        [&](std::size_t i, std::size_t j, std::size_t k) {
            return (i + j == k) ? Scalar::one(f) : Scalar::zero(f);
        },
        unit_vec(f, n, 0));
}

AlgebraPresentation upper_triangular2(Field f) {
    // E11, E12, E22 with matrix-unit products E_ab E_cd = [b == c] E_ad
    static const std::size_t row[3] = {0, 0, 1}, col[3] = {0, 1, 1};
    auto index = [](std::size_t r, std::size_t c) -> int {
        for (int i = 0; i < 3; ++i)
            if (row[i] == r && col[i] == c) return i;
        return -1;
    };
    Vec unit{Scalar::one(f), Scalar::zero(f), Scalar::one(f)};
    return AlgebraPresentation::from_tensor(
        f, {"E11", "E12", "E22"},
        [&](std::size_t i, std::size_t j, std::size_t k) {
            if (col[i] != row[j]) return Scalar::zero(f);
            return index(row[i], col[j]) == static_cast<int>(k) ? Scalar::one(f) : Scalar::zero(f);
        },
        unit);
}

AlgebraPresentation product_algebra(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("product of algebras over different fields");
    std::size_t n = a.dim();
    Field f = a.field();
    std::vector<std::string> labels;
    for (const auto& l : a.labels()) labels.push_back(l + "@0");
    for (const auto& l : b.labels()) labels.push_back(l + "@1");
    Vec unit = a.unit();
    unit.insert(unit.end(), b.unit().begin(), b.unit().end());
    return AlgebraPresentation::from_tensor(
        f, labels,
        [&](std::size_t i, std::size_t j, std::size_t k) {
            if (i < n && j < n && k < n) return a.mu(i, j, k);
            if (i >= n && j >= n && k >= n) return b.mu(i - n, j - n, k - n);
            return Scalar::zero(f);
        },
        unit);
}

AlgebraPresentation change_basis(const AlgebraPresentation& a, const Matrix& p) {
    auto pinv = inverse(p);
    if (!pinv) throw DimensionError("change of basis matrix is singular");
    std::size_t n = a.dim();
    Matrix m(a.field(), n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = *pinv * a.multiply(p.column(i), p.column(j));
            for (std::size_t k = 0; k < n; ++k) m(k, i * n + j) = prod[k];
        }
    return AlgebraPresentation(std::vector<std::string>{}, std::move(m), *pinv * a.unit());
}

AlgebraPresentation induced_algebra(const AlgebraPresentation& a, const Subspace& s, const Vec& unit_in_ambient) {
    std::size_t d = s.dim();
    Field f = a.field();
    Matrix m(f, d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto c = s.coordinates(a.multiply(s.vector(i), s.vector(j)));
            if (!c) throw InternalConsistencyError("subspace is not closed under multiplication");
            for (std::size_t k = 0; k < d; ++k) m(k, i * d + j) = (*c)[k];
        }
    auto u = s.coordinates(unit_in_ambient);
    if (!u) throw InternalConsistencyError("unit does not lie in the subspace");
    return AlgebraPresentation(std::vector<std::string>{}, std::move(m), *u);
}

}  // namespace hpa
