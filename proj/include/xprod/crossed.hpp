// The crossed product R*G of a twist instance: free left R-module on G
// with multiplication determined by
//
//   g r = c_g(r) g           g g' = tau(g,g') (gg')
//
// so that (sum_g l_g g)(sum_h m_h h) has coefficient
// sum_{g'g''=g} l_{g'} c_{g'}(m_{g''}) tau(g',g'') at g. Elements are
// sparse maps g -> coefficient with zero coefficients dropped; equal
// elements compare equal structurally. Both distributive laws hold by
// construction: the product is defined term-by-term from the basis
// formula, which is exactly bilinear extension.
//
// The w-twisted involution is bar(sum r_g g) = sum w(g) c_{g^-1}(bar(r_g)) g^-1.
#pragma once

#include <map>

#include "xprod/report.hpp"
#include "xprod/rng.hpp"
#include "xprod/twist.hpp"

namespace xprod {

struct CrossedElement {
    std::map<int, int> terms;  // group index -> nonzero ring index

    bool is_zero() const { return terms.empty(); }
    int coeff(int g) const {
        auto it = terms.find(g);
        return it == terms.end() ? 0 : it->second;
    }
    bool operator==(const CrossedElement& o) const = default;
};

CrossedElement cx_zero();
CrossedElement cx_basis(const TwistData& t, int r, int g);  // r . g
CrossedElement cx_one(const TwistData& t);                  // 1 . e
CrossedElement cx_add(const TwistData& t, const CrossedElement& a, const CrossedElement& b);
CrossedElement cx_neg(const TwistData& t, const CrossedElement& a);
CrossedElement cx_sub(const TwistData& t, const CrossedElement& a, const CrossedElement& b);
CrossedElement cx_mul(const TwistData& t, const CrossedElement& a, const CrossedElement& b);
// left multiplication by the scalar r (by r . e)
CrossedElement cx_scale(const TwistData& t, int r, const CrossedElement& a);
CrossedElement cx_involution(const TwistData& t, const CrossedElement& a);
std::string cx_to_string(const TwistData& t, const CrossedElement& a);

// Ring-axiom checks on basis elements:
//   associativity over basis triples (r.g, s.h, u.k), exhaustive when
//   (|R||G|)^3 <= 1e7 and seeded-random otherwise; unit laws over all
//   basis elements; involution anti-multiplicativity and involutivity
//   over basis pairs, bar extending bar_R, and bar(1.g) = w(g) g^-1.
// Distributivity holds by construction (see header comment) and is not
// re-checked here.
Report verify_crossed_product(const TwistData& t, Rng& rng);

// The isomorphism coeff[H]*Q -> coeff[G] of an extension instance,
//   sum_q lambda_q . q  ->  sum_q i(lambda_q) s(q),
// checked multiplicative + additive on all element pairs when the crossed
// product has at most 256 elements (on basis pairs otherwise), unital and
// bijective. When w1 is given (and the twist carries the matching w), the
// involution correspondence with the w1-twisted involution on coeff[G],
//   bar(sum r_g g) = sum bar(r_g) w1(p(g)) g^-1,
// is checked on the same elements.
Report verify_extension_iso(const TwistData& t, const ExtensionData& ext,
                            const std::optional<std::vector<int>>& w1, Rng& rng);

}  // namespace xprod
