// Finite G-sets, bisets, transport groupoids and groupoid functors.
//
// The transport groupoid of a left G-set X has the points of X as
// objects and hom(x,y) = {g in G : g.x = y}; composition is group
// multiplication, so an arrow is the pair (g, src) with target g.src.
// It is connected exactly when the action is transitive.
#pragma once

#include <functional>
#include <vector>

#include "xprod/group.hpp"

namespace xprod {

// left action of G on {0..n-1}
struct GSet {
    FiniteGroup G;
    int n = 0;
    std::vector<int> act_;  // g*n + x -> g.x

    int act(int g, int x) const { return act_[g * n + x]; }

    // validates: table shape, e acts as identity, (gh).x = g.(h.x)
    static GSet from_table(FiniteGroup g, const std::vector<std::vector<int>>& table);
    static GSet regular(const FiniteGroup& g);           // X = G, left translation
    static GSet trivial(const FiniteGroup& g, int n);    // every g acts as id
    static GSet one_point(const FiniteGroup& g);

    bool transitive() const;

    bool operator==(const GSet& o) const = default;
};

// commuting left-K right-G actions on {0..n-1}
struct Biset {
    FiniteGroup K, G;
    int n = 0;
    std::vector<int> left_;   // k*n + y
    std::vector<int> right_;  // y*|G| + g

    int left(int k, int y) const { return left_[k * n + y]; }
    int right(int y, int g) const { return right_[y * G.m + g]; }

    GSet left_gset() const;  // forget the right action

    // validates both action laws and (k.y).g = k.(y.g)
    static Biset from_tables(FiniteGroup k, FiniteGroup g, int n, std::vector<int> left,
                             std::vector<int> right);
    // phi^*G: carrier G, k.x = phi(k) x, x.g = x g
    static Biset pullback_group(const FiniteGroup& k, const FiniteGroup& g,
                                const std::vector<int>& phi);
};

struct Arrow {
    int g = 0;
    int src = 0;

    bool operator==(const Arrow& o) const = default;
    bool operator<(const Arrow& o) const { return g != o.g ? g < o.g : src < o.src; }
};

struct TransportGroupoid {
    GSet X;

    int n_objects() const { return X.n; }
    int tgt(const Arrow& f) const { return X.act(f.g, f.src); }
    Arrow id(int x) const { return {X.G.e, x}; }
    Arrow compose(const Arrow& f2, const Arrow& f1) const;  // f2 after f1
    Arrow inv(const Arrow& f) const { return {X.G.inv(f.g), tgt(f)}; }

    std::vector<Arrow> hom(int x, int y) const;
    std::vector<Arrow> arrows_from(int x) const;
    std::vector<Arrow> all_arrows() const;
    bool connected() const { return X.transitive(); }
};

TransportGroupoid transport_groupoid(const GSet& x);

// A functor between transport groupoids, given by its object and arrow
// maps; make_groupoid_functor checks identities, endpoints and
// composition exhaustively and throws std::invalid_argument otherwise.
struct GroupoidFunctor {
    TransportGroupoid source, target;
    std::vector<int> obj_map;
    std::function<Arrow(const Arrow&)> arrow_map;

    int obj(int x) const { return obj_map[x]; }
    Arrow arrow(const Arrow& f) const { return arrow_map(f); }
};

GroupoidFunctor make_groupoid_functor(TransportGroupoid source, TransportGroupoid target,
                                      std::vector<int> obj_map,
                                      std::function<Arrow(const Arrow&)> arrow_map);

// The functor induced by a map of G-sets (same group): (g,x) -> (g, a(x))
GroupoidFunctor transport_of_gmap(const GSet& src, const GSet& tgt, const std::vector<int>& a);

GroupoidFunctor compose_functors(const GroupoidFunctor& w2, const GroupoidFunctor& w1);
GroupoidFunctor identity_functor(const TransportGroupoid& g);

// Full + faithful + surjective on objects, checked exhaustively.
bool is_groupoid_equivalence(const GroupoidFunctor& w);

}  // namespace xprod
