// Strictification S(A) of a weak (G,v)-action.
//
// Objects of S(A) are pairs (A, g) with A an object of the base category
// and g in G; hom_S((A,g),(B,k)) = hom(R_g A, R_k B), stored as the
// underlying morphism. The strict action relabels,
//   R^S_k(A, g) = (A, gk),
// and conjugates morphisms through the structure isos L:
//   v(k) = +1:  L_{b,k}(B)^-1 . R_k(phi) . L_{a,k}(A)
//   v(k) = -1:  L_{a,k}(A)^-1 . R_k(phi) . L_{b,k}(B)
// (inverses taken from the stored inverse tables). The identity-matrix
// isos kappa_{A,g}: (A,g) -> (R_g A, e) exhibit P: S(A) -> A,
// P(A,g) = R_g A, as an equivalence.
//
// For a twist with involution the duality descends to S strictly:
//   I_S(A,h) = (A*,h) (plain ranks: same label, same rank)
//   I_S(phi: (A,h)->(B,k)) = t_h(A)^-1 . phi* . t_k(B)
//   E_S(A,h) = identity
// and verify_strict_involution checks that I_S is a contravariant
// involution commuting with every R^S_g on the nose.
//
// The alpha/beta constructions realize the universal property: alpha
// turns a strictly equivariant functor F out of S(A) into weak data
// (F0 = F . emb, T_g(A) = F(kappa_{A,g}^-1)); beta rebuilds a strict
// functor from weak data. Both round trips are checked extensionally.
#pragma once

#include "xprod/modcat.hpp"

namespace xprod {

struct SObj {
    GenObj A;
    int g = 0;

    bool operator==(const SObj& o) const = default;
};

struct SMor {
    SObj src, tgt;
    GenMor mor;  // underlying morphism act(src.g, src.A) -> act(tgt.g, tgt.A)

    bool operator==(const SMor& o) const = default;
};

GenObj s_underlying(const WeakActionData& wa, const SObj& x);
SMor s_id(const WeakActionData& wa, const SObj& x);
SMor s_compose(const WeakActionData& wa, const SMor& f2, const SMor& f1);
SMor s_inv(const WeakActionData& wa, const SMor& f);

SObj strict_obj(const WeakActionData& wa, int k, const SObj& x);
SMor strict_act(const WeakActionData& wa, int k, const SMor& f);

// kappa_{A,g}: (A,g) -> (R_g A, e), identity underlying morphism
SMor kappa(const WeakActionData& wa, const GenObj& a, int g);
SMor kappa_inv(const WeakActionData& wa, const GenObj& a, int g);

// embedding A -> S(A) at label e
SObj embed_obj(const WeakActionData& wa, const GenObj& a);
SMor embed_mor(const WeakActionData& wa, const GenMor& f);

// twisted dual on S (twist actions with involution data only)
SObj i_s_obj(const TwistData& t, const SObj& x);
SMor i_s_mor(const TwistData& t, const WeakActionData& wa, const SMor& f);
SMor e_s_mor(const TwistData& t, const WeakActionData& wa, const SObj& x);

// Functors given extensionally, for the universal-property checks.
struct StrictFunctor {
    std::function<SObj(const SObj&)> obj;
    std::function<SMor(const SMor&)> mor;
};

struct WeakEquivariantData {
    std::function<SObj(const GenObj&)> obj;    // F0 on objects
    std::function<SMor(const GenMor&)> mor;    // F0 on morphisms
    std::function<SMor(int, const GenObj&)> T; // T_g(A): F0(R_g A) -> R^S_g(F0 A)
};

StrictFunctor strict_identity_functor();
StrictFunctor strict_r_functor(const WeakActionData& wa, int a);  // R^S_a
WeakEquivariantData alpha_of(const WeakActionData& wa, const StrictFunctor& f);
StrictFunctor beta_of(const WeakActionData& wa, const WeakEquivariantData& w);

// Checks: functoriality and strictness of R^S (exhaustive over rank <= 1
// homs when |R| <= 32, sampled at higher rank), R^S_e = id, P full,
// faithful and essentially surjective with explicit witnesses, and both
// adjunction round trips.
Report verify_strict_action(const WeakActionData& wa, int max_rank, Rng& rng);
Report verify_strict_action(const TwistData& t, int max_rank, Rng& rng);

// I_S/E_S checks on a twist with involution: contravariance, involutivity,
// strict commutation with every R^S_g, naturality of E_S.
Report verify_strict_involution(const TwistData& t, int max_rank, Rng& rng);

}  // namespace xprod
