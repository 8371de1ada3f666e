#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hpa/presentations.hpp"
#include "hpa/report.hpp"

namespace hpa {

// kappa: H (x) A -> A as an n x (m n) matrix; column h*n + a holds h.a.
struct ActionMap {
    ActionMap(AlgebraPresentation algebra, BialgebraPresentation hopf, Matrix kappa);

    AlgebraPresentation algebra;
    BialgebraPresentation hopf;
    Matrix kappa;

    Field field() const noexcept { return algebra.field(); }
    std::size_t n() const noexcept { return algebra.dim(); }
    std::size_t m() const noexcept { return hopf.dim(); }
    Vec act(const Vec& h, const Vec& a) const { return kappa * tensor(h, a); }
    Vec act(std::size_t h, std::size_t a) const { return kappa.column(h * n() + a); }
    Matrix act_matrix(const Vec& h) const;  // a -> h.a
};

const std::vector<std::string>& action_equation_ids();
EquationResult check_action_equation(const ActionMap& a, std::string_view id);
ClassificationVerdict classify_action(const ActionMap& a);

// A # H on the basis of A (x) H, (a#h)(b#g) = a(h_(1).b) # h_(2)g.
struct SmashData {
    ActionMap action;
    AlgebraPresentation product;  // unit slot holds 1#1, which need not be a unit
    Matrix eta;                   // a -> a#1
    Matrix eta_underline;         // a -> a(1.1)#1
    Matrix pi;                    // r -> r 1_A
    Subspace underline;
    std::optional<AlgebraPresentation> underline_algebra;  // present when lax, unit eta_underline(1)
    std::vector<Matrix> left;                              // b.(a#h) = ba#h
    std::vector<Matrix> right;                             // (a#h).b = (a#h)(b#1)
};

enum class RingMode { lax, weak, full };

SmashData build_smash(const ActionMap& a);
// lax and weak use eta_underline, full uses eta.
AxiomReport verify_smash_ring(const SmashData& s, RingMode mode);

struct PartialGroupAction {
    GroupTable group;
    AlgebraPresentation algebra;
    std::vector<Vec> idempotents;  // e_sigma
    std::vector<Matrix> alphas;    // alpha_sigma, meaningful on e_{sigma^-1} A only
};

AxiomReport verify_partial_group_action(const PartialGroupAction& p);
ActionMap group_to_kG(const PartialGroupAction& p);
PartialGroupAction kG_to_group(const ActionMap& a);
// Equal idempotents and equal alpha_sigma on the ideals e_{sigma^-1} A.
bool same_partial_action(const PartialGroupAction& p, const PartialGroupAction& q);

// G acting on a finite set Omega by act[sigma][omega], restricted to the
// subset X: A = k^X, e_sigma the indicator of X and sigma X, and
// alpha_sigma(delta_x) = delta_{sigma x} when sigma x lies in X.
PartialGroupAction restricted_permutation_action(const GroupTable& g, const std::vector<std::vector<std::size_t>>& act,
                                                 const std::vector<std::size_t>& subset, Field f);

ActionMap trivial_action(const AlgebraPresentation& a, const BialgebraPresentation& h);  // h.a = eps(h) a
ActionMap zero_action(const AlgebraPresentation& a, const BialgebraPresentation& h);
// kZ2 on the upper triangular 2x2 matrices with g.b = b_22 E22; g.1 is not central.
ActionMap noncentral_triangular_action(Field f);

// Built-in partial group actions.
PartialGroupAction partial_z2_on_k2(Field f);   // e_g = (1,0)
PartialGroupAction global_z2_on_k2(Field f);    // swap
PartialGroupAction partial_s3_on_k2(Field f);   // natural action on {0,1,2} restricted to {0,1}
PartialGroupAction partial_z3_on_k2(Field f);   // regular action restricted to {0,1}

ActionMap change_basis(const ActionMap& a, const Matrix& p);
ActionMap direct_sum(const ActionMap& a1, const ActionMap& a2);

}  // namespace hpa
