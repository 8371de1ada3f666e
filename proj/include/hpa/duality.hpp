#pragma once

#include "hpa/actions.hpp"
#include "hpa/coactions.hpp"

namespace hpa {

// Left A-linear maps F: X -> A stored as n x dim(X) matrices and flattened
// column by column, so entry (a, c) sits at c*n + a.
Vec flatten_map(const Matrix& f);
Matrix unflatten_map(Field f, std::size_t n, std::size_t cols, const Vec& v);

// *C = _A Hom(C, A) with (f#g)(c) = g(c_(1) f(c_(2))) and unit the counit,
// together with the dual *(C1_A) of the unital summand.
struct DualRing {
    std::size_t n = 0;               // dim A
    std::size_t coring_dim = 0;      // dim C
    Subspace space;                  // *C inside the flattened n x dim C maps
    AlgebraPresentation ring;        // on coordinates of `space`, unit slot = counit
    std::vector<Matrix> left;        // (a f)(c) = f(c a)
    std::vector<Matrix> right;       // (f b)(c) = f(c) b
    Matrix pi;                       // f -> 1_A f
    Subspace unital;                 // 1_A *C, in coordinates of `space`
    Subspace underline_space;        // *(C1_A) inside flattened n x dim(C1_A) maps
    AlgebraPresentation underline_ring;
    Matrix alpha;                    // restriction, unital coords -> underline_space coords
    Matrix beta;                     // g -> g(- 1_A), the other way

    Matrix functional(const Vec& coords) const;  // n x dim C
};

DualRing dual_ring_of_coring(const CoringData& d, CounitChoice counit = CounitChoice::underline);
// Right unital ring laws: weak checks "1.4.2" on all of *C, lax checks "1.4.1" on 1_A *C,
// full checks "1.3.2".
AxiomReport verify_dual_ring(const DualRing& r, RingMode mode);
// alpha and beta mutually inverse, alpha multiplicative and unit preserving.
AxiomReport verify_unital_iso(const DualRing& r);

// Hom(H, A) with f(h_j) in column j, flattened as above (index j*n + a).
struct KoppinenSmash {
    CoactionMap coaction;
    AlgebraPresentation product;  // (f#g)(h) = f(h_(2))_[0] g(h_(1) f(h_(2))_[1]), unit slot eta(1)
    Matrix eta;                   // eta(a)(h) = eps(h a_[1]) a_[0]
    Subspace underline;           // f(h) = 1_[0] f(h 1_[1])
    std::vector<Matrix> left;     // (a f)(h) = a_[0] f(h a_[1])
    std::vector<Matrix> right;    // (f b)(h) = f(h) b
    Matrix phi;                   // *C coordinates -> Hom(H, A), f -> f o (eta_A (x) H)
    AxiomReport checks;           // underline closure, unit placement, phi iso
};

KoppinenSmash build_koppinen(const CoactionMap& c);

// The dictionary h*.a = h*(a_[1]) a_[0] between coactions of H on A and
// actions of cop(dual(H)) on op(A).
ActionMap coaction_to_action(const CoactionMap& c);
CoactionMap action_to_coaction(const ActionMap& a);
// sum_i Delta(h_i) (x) h_i* = sum_{i,j} h_i (x) h_j (x) h_i* h_j*
bool dual_basis_identity(const BialgebraPresentation& h);

// alpha(a # h*)(h) = a h*(h) from op(A) # cop(dual(H)) to Hom(H, A); the
// smash index a*m + j goes to j*n + a.
struct DualSmashIso {
    SmashData smash;
    KoppinenSmash koppinen;
    Matrix alpha;
    AxiomReport checks;
};

DualSmashIso prop410_iso(const CoactionMap& c);

}  // namespace hpa
