#pragma once

#include "hpa/actions.hpp"
#include "hpa/tensor_over.hpp"

namespace hpa {

enum class IntegralSide { left_in_h, left_in_dual };

// Left integrals: h t = eps(h) t in H, or h* phi = h*(1_H) phi in H*
// (coordinates in the dual basis).
struct IntegralSpace {
    IntegralSide side;
    Subspace basis;
};

IntegralSpace integrals(const HopfPresentation& h, IntegralSide side);

struct FrobeniusData {
    Vec t;           // left integral in H
    Vec phi;         // left integral in H*, rescaled so <phi, t> = 1
    Scalar pairing;  // <phi, t> before rescaling
    Matrix s_bar;    // inverse antipode
    AxiomReport checks;  // keys "5.3.1a" and "5.3.2"
};

// Throws PreconditionError when an integral space is not one-dimensional,
// the pairing vanishes, or the antipode is not invertible.
FrobeniusData frobenius_pair(const HopfPresentation& h);

// t_(1) (x) t_(2) (x) t_(3) (x) t_(4) = t_(1) (x) t_(3) (x) t_(2) (x) t_(4)
EquationResult check_cocommutativity_534(const BialgebraPresentation& h, const Vec& t);
// Delta(t) = tau Delta(t), the weaker condition.
bool is_cocommutative_element(const BialgebraPresentation& h, const Vec& t);

// Frobenius system for (A#H)1_A over A: nu = (A # phi) restricted to the
// underline, e = (1#t_(2))1_A (x)_A (1#S^-1(t_(1)))1_A. Coordinates are those of
// smash.underline; e lives in the quotient `uu`.
struct FrobeniusSystem {
    SmashData smash;
    Bimodule underline_module;
    TensorOverSub uu;
    Matrix nu;  // n x dim underline
    Vec e;
    AxiomReport identities;  // commute, bimodule, counit-like
};

// Hypotheses: partial, h.1_A central for all basis h ("central"), and the four-leg identity "5.3.4" for t.
FrobeniusSystem build_frobenius_system(const ActionMap& a, const FrobeniusData& fd);

}  // namespace hpa
