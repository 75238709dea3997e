// Twisting data (c, tau, w, v) for a crossed product R*G and its
// validators.
//
//   c    : G -> Aut(R), one automorphism table per group element
//   tau  : G x G -> R^x, the 2-cocycle twisting the multiplication
//   w    : G -> R^x, the involution twist (optional)
//   bar  : an involution of R (optional, required together with w)
//   v    : G -> {+1,-1}, the sign homomorphism for weak actions
//
// Unit values (tau, w) carry stored inverses computed at construction;
// the validators check the stored inverse against the entry itself, so a
// post-construction mutation of any single entry is always detected even
// when the mutated table happens to satisfy the algebraic conditions of a
// different valid instance.
//
// Quantifiers over R are exhaustive for |R| <= 32 and seeded-random
// (at least 10*|G|^3 draws) above; quantifiers over G are exhaustive for
// |G| <= 8.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xprod/group.hpp"
#include "xprod/report.hpp"
#include "xprod/ring.hpp"
#include "xprod/rng.hpp"

namespace xprod {

struct TwistData {
    FiniteGroup G;
    FiniteRing R;
    std::vector<RingAut> c;         // size |G|
    std::vector<int> tau_;          // |G|^2 flattened: tau_[g*|G|+h]
    std::vector<int> tau_inv_;      // stored inverses, -1 where not a unit
    std::optional<std::vector<int>> bar;    // involution table on R
    std::optional<std::vector<int>> w;      // size |G|
    std::optional<std::vector<int>> w_inv;  // stored inverses, -1 where not a unit
    SignHom v;

    int tau(int g, int h) const { return tau_[g * G.m + h]; }
    int tau_inv(int g, int h) const;
    const RingAut& cg(int g) const { return c[g]; }
    int c_at(int g, int r) const { return c[g].at(r); }
    int c_inv_at(int g, int r) const { return c[g].at_inv(r); }

    bool has_involution() const { return bar.has_value() && w.has_value(); }
    int bar_at(int r) const;
    int w_at(int g) const;
    int w_inv_at(int g) const;

    // u_g = (w(g) * tau(g^-1, g))^-1, the unit entering the dual twist t_g.
    int u_at(int g) const;

    // Construction validates shapes and computes stored inverses. Non-unit
    // tau or w entries are tolerated here (inverse stored as -1) and
    // reported by the validators as distinct pre-validation failures.
    static TwistData make(FiniteGroup g, FiniteRing r, std::vector<std::vector<int>> c_tables,
                          std::vector<int> tau_flat, std::optional<std::vector<int>> bar,
                          std::optional<std::vector<int>> w, std::optional<SignHom> v);

    // All-identity c tables for untwisted instances.
    static std::vector<std::vector<int>> trivial_c(const FiniteGroup& g, const FiniteRing& r);
};

// Conditions for R*G to be an associative unital ring:
//   every c_g an automorphism, c_e = id, every tau(g,h) a unit,
//   tau(e,g) = tau(g,e) = 1,
//   c_{tau(g,h)} . c_{gh} = c_g . c_h   (c_u = conjugation by the unit u)
//   tau(g,h) tau(gh,k) = c_g(tau(h,k)) tau(g,hk)
// plus the stored-inverse consistency checks described above.
Report validate_twist(const TwistData& t, Rng& rng);

// Conditions for the w-twisted involution on R*G:
//   bar an involution of R, every w(g) a unit, w(e) = 1,
//   w(gh) = w(h) c_{h^-1}(w(g)) tau(h^-1,g^-1) c_{(gh)^-1}(bar(tau(g,h)))^-1
//   bar(w(g)) = w(g) c_g^-1(tau(g,g^-1) bar(tau(g,g^-1))^-1)
//   bar(c_g(r)) = c_g((w(g) tau(g^-1,g))^-1 bar(r) (w(g) tau(g^-1,g)))
// and the derived inverse formula
//   w(g)^-1 = c_{g^-1}(w(g^-1)) tau(g^-1,g) bar(tau(g^-1,g))^-1
// checked as a two-sided product. Throws std::invalid_argument when bar
// or w is absent.
Report validate_involution_twist(const TwistData& t, Rng& rng);

// A finite extension 1 -> H -> G -> Q -> 1 with a chosen set-theoretic
// section s: Q -> G (p . s = id, s(e) = e). Tables are index maps.
struct ExtensionData {
    FiniteRing coeff;                       // the base ring R of R[H]
    std::optional<std::vector<int>> coeff_bar;  // involution on coeff
    FiniteGroup H, G, Q;
    std::vector<int> incl;     // H -> G, injective homomorphism
    std::vector<int> proj;     // G -> Q, surjective homomorphism
    std::vector<int> section;  // Q -> G
};

// Builds the twist making R[H] * Q isomorphic to R[G]:
//   c_q = conjugation by s(q), tau(q,q') = s(q) s(q') s(qq')^-1 in H.
// The base ring is the group ring coeff[H]; when coeff_bar is present
// (or by default, with the identity on coeff) the ring carries the
// standard involution  sum r_h h  ->  sum bar(r_h) h^-1.
// Throws std::invalid_argument on: non-homomorphism incl/proj, incl not
// injective, proj not surjective, kernel mismatch (ker proj != im incl),
// s not a section.
TwistData twist_from_extension(const ExtensionData& ext);

// Installs the involution twist w(q) = w1(q) * tau(q^-1, q)^-1 induced by
// a homomorphism w1: Q -> cent(coeff)^x with bar(w1(q)) = w1(q) (the
// pullback along the projection of a twisted group-ring involution).
// Throws std::invalid_argument when w1 is not a homomorphism, a value is
// not a central unit, or a value is not bar-symmetric.
void set_w_from_w1(TwistData& t, const ExtensionData& ext, const std::vector<int>& w1);

// The isomorphism  coeff[H] * Q -> coeff[G]  of the extension instance,
// as an index table on crossed-product elements; exposed for tests via
// bridge helpers in crossed.hpp.

}  // namespace xprod
