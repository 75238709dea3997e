// Finite groups as explicit multiplication tables, plus sign homomorphisms.
// Elements are indices 0..m-1. Construction validates the group axioms by
// full enumeration (intended for m <= 24) and throws std::invalid_argument
// on violation, so a FiniteGroup value is always a group.
#pragma once

#include <string>
#include <vector>

namespace xprod {

struct FiniteGroup {
    int m = 0;                // order
    int e = 0;                // unit index
    std::vector<int> mul_;    // m*m, row-major: mul_[a*m+b] = a*b
    std::vector<int> inv_;    // inverse per element

    int mul(int a, int b) const { return mul_[a * m + b]; }
    int inv(int a) const { return inv_[a]; }

    // Names for witnesses: "e", then "g1", "g2", ... ("t" for order 2).
    std::string name(int a) const;

    static FiniteGroup cyclic(int n);
    static FiniteGroup from_table(const std::vector<std::vector<int>>& mul);
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

    // Pair encoding used by product(): index = x*b.m + y.
    static int pair_index(const FiniteGroup& b, int x, int y) { return x * b.m + y; }
    static std::pair<int, int> pair_split(const FiniteGroup& b, int i) {
        return {i / b.m, i % b.m};
    }

    bool operator==(const FiniteGroup& o) const = default;
};

// f: K -> G given as an index table; true iff f(xy) = f(x)f(y) and f(e) = e.
bool is_group_hom(const FiniteGroup& k, const FiniteGroup& g, const std::vector<int>& f);

// A homomorphism v: G -> {+1,-1}. Trivial by default.
struct SignHom {
    std::vector<int> values;  // per element, +1 or -1

    int at(int g) const { return values[g]; }
    static SignHom trivial(const FiniteGroup& g) { return {std::vector<int>(g.m, 1)}; }

    // Throws std::invalid_argument unless v(e) = +1 and v(gh) = v(g)v(h).
    void validate(const FiniteGroup& g) const;

    bool operator==(const SignHom& o) const = default;
};

}  // namespace xprod
