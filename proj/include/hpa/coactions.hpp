#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hpa/presentations.hpp"
#include "hpa/report.hpp"
#include "hpa/tensor_over.hpp"

namespace hpa {

// rho: A -> A (x) H as an (n m) x n matrix; coordinate (a, h) of A (x) H sits
// at a*m + h.
struct CoactionMap {
    CoactionMap(AlgebraPresentation algebra, BialgebraPresentation hopf, Matrix rho);

    AlgebraPresentation algebra;
    BialgebraPresentation hopf;
    Matrix rho;

    Field field() const noexcept { return algebra.field(); }
    std::size_t n() const noexcept { return algebra.dim(); }
    std::size_t m() const noexcept { return hopf.dim(); }
    Vec one() const { return rho * algebra.unit(); }  // rho(1_A)
};

const std::vector<std::string>& coaction_equation_ids();
EquationResult check_coaction_equation(const CoactionMap& c, std::string_view id);
ClassificationVerdict classify_coaction(const CoactionMap& c);

struct CoringData {
    CoactionMap coaction;
    Bimodule module;           // A (x) H; a.(b (x) h) = ab (x) h, (b (x) h).a = (b (x) h) rho(a)
    Matrix pi;                 // c -> c 1_A
    Subspace underline_basis;  // image of pi
    Matrix delta;              // (pi (x) H)(A (x) delta_H): A (x) H -> A (x) H (x) H
    Matrix eps;                // A (x) counit
    Matrix eps_underline;      // eps o pi
    TensorOverSub cc;          // C (x)_A C
    Matrix delta_q;            // Delta into C (x)_A C coordinates
};

enum class CoringMode { lax, weak, full };
enum class CounitChoice { plain, underline };

CoringData build_coring(const CoactionMap& c);
AxiomReport verify_coring_axioms(const CoringData& d, CoringMode mode, CounitChoice counit = CounitChoice::underline);

// The unital summand C1_A as a bimodule on the underline basis.
Bimodule underline_bimodule(const CoringData& d);

// rho(1_A) in underline coordinates, after checking it is grouplike.
Vec grouplike_of(const CoactionMap& c);

struct RelativeHopfModule {
    std::size_t dim = 0;
    std::vector<Matrix> action;  // action[a] is m -> m b_a
    Matrix rho_m;                // (dim m) x dim
};

RelativeHopfModule regular_relative_module(const CoactionMap& c);
AxiomReport check_relative_hopf_module(const RelativeHopfModule& mod, const CoactionMap& c);

struct AlphaBeta {
    TensorOverSub target;  // M (x)_A C1_A
    Matrix alpha;          // alpha(rho_M): M -> M (x)_A C1_A
    Matrix beta;           // M (x)_A C1_A -> M (x) H
    bool beta_alpha_identity;
    bool alpha_beta_identity;
    bool alpha_right_linear;
};

AlphaBeta alpha_beta(const RelativeHopfModule& mod, const CoactionMap& c);

// Builders.
Vec sweedler_idempotent(const HopfPresentation& h4, const Scalar& alpha);  // 1/2 + c/2 + alpha cx
CoactionMap coaction_on_ground(const BialgebraPresentation& h, const Vec& e);  // rho(1) = 1 (x) e
CoactionMap sweedler_on_k(Field f, const Scalar& alpha);
CoactionMap sweedler_on_b(Field f);  // on k[x]/(x^2)
CoactionMap trivial_coaction(const AlgebraPresentation& a, const BialgebraPresentation& h);
CoactionMap zero_coaction(const AlgebraPresentation& a, const BialgebraPresentation& h);
CoactionMap regular_coaction(const BialgebraPresentation& h);  // A = H, rho = Delta
CoactionMap direct_sum(const CoactionMap& c1, const CoactionMap& c2);
CoactionMap change_basis(const CoactionMap& c, const Matrix& p);

}  // namespace hpa
