#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hpa/exactlin.hpp"
#include "hpa/report.hpp"

namespace hpa {

struct Term {
    std::size_t index;
    Scalar coeff;
};
using SparseVec = std::vector<Term>;

SparseVec sparse(const Vec& v);

// Finite-dimensional algebra by structure constants. Column i*n+j of mult()
// holds the coordinates of b_i b_j, so mu(i,j,k) = mult()(k, i*n+j).
class AlgebraPresentation {
public:
    AlgebraPresentation(std::vector<std::string> labels, Matrix mult, Vec unit);
    static AlgebraPresentation from_tensor(Field f, std::vector<std::string> labels,
                                           const std::function<Scalar(std::size_t, std::size_t, std::size_t)>& mu,
                                           Vec unit);

    Field field() const noexcept { return mult_.field(); }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const Matrix& mult() const noexcept { return mult_; }
    const Vec& unit() const noexcept { return unit_; }

    Scalar mu(std::size_t i, std::size_t j, std::size_t k) const { return mult_(k, i * dim() + j); }
    const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
    Vec multiply(const Vec& a, const Vec& b) const;
    Matrix left_mult(const Vec& a) const;
    Matrix right_mult(const Vec& a) const;

    friend bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b) {
        return a.mult_ == b.mult_ && a.unit_ == b.unit_;
    }

private:
    std::vector<std::string> labels_;
    Matrix mult_;
    Vec unit_;
    std::vector<SparseVec> products_;
};

// Column i of comult() holds Delta(b_i) in the basis b_j (x) b_k at row j*m+k.
class CoalgebraPresentation {
public:
    CoalgebraPresentation(std::vector<std::string> labels, Matrix comult, Vec counit);

    Field field() const noexcept { return comult_.field(); }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const Matrix& comult() const noexcept { return comult_; }
    const Vec& counit() const noexcept { return counit_; }

    Scalar delta(std::size_t i, std::size_t j, std::size_t k) const { return comult_(j * dim() + k, i); }
    const SparseVec& coproduct(std::size_t i) const { return coproducts_[i]; }
    Vec comultiply(const Vec& h) const { return comult_ * h; }
    Scalar epsilon(const Vec& h) const;
    Matrix counit_row() const;

    friend bool operator==(const CoalgebraPresentation& a, const CoalgebraPresentation& b) {
        return a.comult_ == b.comult_ && a.counit_ == b.counit_;
    }

private:
    std::vector<std::string> labels_;
    Matrix comult_;
    Vec counit_;
    std::vector<SparseVec> coproducts_;
};

struct BialgebraPresentation {
    BialgebraPresentation(AlgebraPresentation a, CoalgebraPresentation c);
    AlgebraPresentation algebra;
    CoalgebraPresentation coalgebra;

    Field field() const noexcept { return algebra.field(); }
    std::size_t dim() const noexcept { return algebra.dim(); }
    friend bool operator==(const BialgebraPresentation&, const BialgebraPresentation&) = default;
};

// Antipode matrix: column j is S(b_j).
struct HopfPresentation {
    BialgebraPresentation bialgebra;
    Matrix antipode;
    std::optional<Matrix> antipode_inverse;

    Field field() const noexcept { return bialgebra.field(); }
    std::size_t dim() const noexcept { return bialgebra.dim(); }
    const AlgebraPresentation& algebra() const noexcept { return bialgebra.algebra; }
    const CoalgebraPresentation& coalgebra() const noexcept { return bialgebra.coalgebra; }
    // S^{-1}, taken from antipode_inverse or computed by inversion.
    Matrix inverse_antipode() const;

    friend bool operator==(const HopfPresentation& a, const HopfPresentation& b) {
        return a.bialgebra == b.bialgebra && a.antipode == b.antipode;
    }
};

// Product in A_1 (x) ... (x) A_r with the row-major tensor basis.
Vec multiply_in_tensor(const std::vector<const AlgebraPresentation*>& factors, const Vec& x, const Vec& y);

AxiomReport verify(const AlgebraPresentation& a);
AxiomReport verify(const CoalgebraPresentation& c);
AxiomReport verify(const BialgebraPresentation& b);
AxiomReport verify(const HopfPresentation& h);

// Solves the linear antipode equations; absent when no antipode exists.
std::optional<Matrix> solve_antipode(const BialgebraPresentation& b);
// Attaches the solved antipode and its inverse.
HopfPresentation make_hopf(BialgebraPresentation b);

struct GroupTable {
    std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of g_i g_j
    std::vector<std::string> names;

    std::size_t order() const noexcept { return table.size(); }
    std::size_t mul(std::size_t i, std::size_t j) const { return table[i][j]; }
    std::size_t identity() const;
    std::size_t inverse(std::size_t i) const;
};

// Validates closure, associativity, identity and inverses.
GroupTable make_group_table(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names = {});
GroupTable cyclic_group(std::size_t n);
GroupTable direct_product(const GroupTable& g, const GroupTable& h);
// Closure of the given permutations of {0..k-1}; element 0 is the identity.
GroupTable group_from_permutations(const std::vector<std::vector<std::size_t>>& generators);
GroupTable symmetric_group3();
GroupTable dihedral_group(std::size_t n);
GroupTable quaternion_group();
// One representative of every isomorphism class of groups of order <= max_order (max 8).
std::vector<GroupTable> small_groups(std::size_t max_order);

HopfPresentation group_algebra(const GroupTable& g, Field f);
HopfPresentation build_sweedler4(Field f);
// Identifies the basis of b as a group under its multiplication if every basis
// element is grouplike and products of basis elements are basis elements.
std::optional<GroupTable> group_of_grouplikes(const BialgebraPresentation& b);

AlgebraPresentation op(const AlgebraPresentation& a);
CoalgebraPresentation cop(const CoalgebraPresentation& c);
BialgebraPresentation dual(const BialgebraPresentation& b);
BialgebraPresentation op(const BialgebraPresentation& b);
BialgebraPresentation cop(const BialgebraPresentation& b);
HopfPresentation dual_hopf(const HopfPresentation& h);
HopfPresentation op(const HopfPresentation& h);
HopfPresentation cop(const HopfPresentation& h);

// Small algebras used as module algebras.
AlgebraPresentation ground_algebra(Field f);
AlgebraPresentation diagonal_algebra(Field f, std::size_t n);       // k^n
AlgebraPresentation truncated_polynomials(Field f, std::size_t n);  // k[x]/(x^n)
AlgebraPresentation upper_triangular2(Field f);                     // basis E11, E12, E22
AlgebraPresentation product_algebra(const AlgebraPresentation& a, const AlgebraPresentation& b);
// Same algebra in the basis given by the columns of p (p invertible).
AlgebraPresentation change_basis(const AlgebraPresentation& a, const Matrix& p);
// The structure constants of a subalgebra on the basis of s; throws
// InternalConsistencyError when s is not closed under the product.
AlgebraPresentation induced_algebra(const AlgebraPresentation& a, const Subspace& s, const Vec& unit_in_ambient);

}  // namespace hpa
