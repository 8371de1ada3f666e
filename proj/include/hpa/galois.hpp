#pragma once

#include "hpa/duality.hpp"
#include "hpa/tensor_over.hpp"

namespace hpa {

// T = {b in A | rho(b) = b rho(1_A)}
struct Coinvariants {
    Subspace basis;
    AlgebraPresentation algebra;  // on the coordinates of `basis`
};

Coinvariants coinvariants(const CoactionMap& c);

// A (x)_T A with T acting by right and left multiplication.
TensorOverSub tensor_over(const Coinvariants& t, const AlgebraPresentation& a);

// Left T-module structure of A: Hom_T(A, T), trace ideal and dual basis.
struct ProgeneratorReport {
    std::size_t hom_dim = 0;  // dim Hom_T(A, T)
    bool generator = false;   // 1_A in the trace ideal
    bool projective = false;  // id_A = sum g_i(-) a_i
    bool progenerator() const { return generator && projective; }
};

ProgeneratorReport left_progenerator(const Coinvariants& t, const AlgebraPresentation& a);

struct CanonicalMap {
    TensorOverSub domain;  // A (x)_T A
    Subspace underline;    // (A (x) H) rho(1_A)
    Matrix can;            // domain coordinates -> underline coordinates
    std::size_t rank = 0;
    bool injective = false;
    bool surjective = false;
    bool bijective() const { return injective && surjective; }
};

// can(a (x) b) = a b_[0] (x) b_[1]
CanonicalMap canonical_map(const CoactionMap& c);

// theta((a # h*) 1_A)(b) = h*(b_[1]) b_[0] a on the underline of op(A) # cop(dual(H)),
// landing in End_T(A); endomorphisms are flattened column by column.
struct ThetaMap {
    SmashData smash;
    Subspace end_t;   // End_T(A) inside the flattened n x n matrices
    Matrix theta;     // smash coordinates -> flattened End(A)
    Matrix star_can;  // Hom(H, A) -> flattened End(A), f -> (a -> a_[0] f(a_[1]))
    std::size_t rank = 0;
    bool bijective = false;
    AxiomReport checks;  // image in End_T(A), theta = *can o alpha
};

ThetaMap theta_map(const CoactionMap& c);

struct MoritaContext {
    Coinvariants t;
    KoppinenSmash ring;  // the underline of ring.product acts
    Subspace q;          // inside Hom(H, A), keys "7.3.1" and "7.3.2"
    Subspace q_smash;    // inside op(A) # cop(dual(H)), keys "7.3.3" and "7.3.4"
    Matrix tau;          // (a, q_i) at a*dim Q + i -> A
    Matrix mu;           // (q_i, a) at i*n + a -> Hom(H, A)
    bool tau_surjective = false;
    bool tau_criterion = false;  // some q in Q has q(1_H) = 1_A
    bool mu_surjective = false;
    bool strict() const { return tau_surjective && mu_surjective; }
    AxiomReport checks;
};

MoritaContext morita_context(const CoactionMap& c);

struct GaloisReport {
    std::size_t t_dim = 0;
    CanonicalMap can;
    ProgeneratorReport progenerator;
    std::size_t theta_rank = 0;
    bool theta_bijective = false;
    std::size_t q_dim = 0;
    bool tau_surjective = false;
    bool mu_surjective = false;
    bool strict = false;
    // the three equivalent conditions; can and theta include the progenerator part
    bool via_can = false;
    bool via_theta = false;
    bool via_morita = false;
    bool galois = false;
};

// Throws InternalConsistencyError when the three conditions disagree.
GaloisReport galois_verdict(const CoactionMap& c);

}  // namespace hpa
