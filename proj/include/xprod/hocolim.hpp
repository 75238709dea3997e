// Homotopy colimits of category-valued functors on transport groupoids,
// with involution, pushforward, fiberwise maps, and finite direct-sum
// completion.
//
// A fiber type Fib describes the value category together with the group
// action that glues it over the groupoid:
//
//   types   Obj, Mor                regular, with operator==
//   act     act_obj(a, X), act_mor(a, f)
//           with act(e,-) = id and act(b, act(a, -)) = act(mul(a,b), -),
//           so arrow g of the groupoid acts through label(g)
//   cat     id(X), compose(g, f) (g after f), add(f, g),
//           zero_mor(X, Y), is_zero(f), mor_src(f), mor_tgt(f)
//   dual    dual_obj(X), dual_mor(f) (contravariant),
//           e_mor(X): X -> X**,
//           T(a, X): act(a, X*) -> act(a, X)*  (the action/involution
//           comparison; identity for the strict fibers used here, kept
//           explicit so dual() follows the general formula)
//   misc    group() (the acting group), sample_obj(rng),
//           sample_mor(X, Y, rng)
//
// An object of the colimit is a pair (x, A) of a groupoid object and a
// fiber object. A morphism (x,A) -> (y,B) is a formal sum of terms
// f.phi over arrows f: x -> y, with component phi: A -> act(label f, B).
// Composition distributes over terms; on single terms
//
//   (g.psi) o (f.phi) = (g o f).(act(label f, psi) o phi).
//
// Morphisms are kept canonical: components are stored in a sorted map
// and zero components are dropped, so operator== is decidable equality.
//
// The involution sends (x,A) to (x,A*) and a term f.phi, f: x -> y, to
// the term at f^{-1} with component
//
//   act(label f^{-1}, dual(phi)) o act(label f^{-1}, T(label f, B)),
//
// and E(x,A) = id_x . E(A). Every arrow f gives a direct-sum-style
// isomorphism f.id: (x, act(label f, B)) -> (y, B) witnessing that the
// colimit identifies a fiber object with its transports.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "xprod/groupoid.hpp"
#include "xprod/modcat.hpp"
#include "xprod/report.hpp"
#include "xprod/rng.hpp"
#include "xprod/strictify.hpp"
#include "xprod/twist.hpp"

namespace xprod {

template <class Fib>
struct Hocolim {
    TransportGroupoid gpd;
    const Fib* fib = nullptr;
    std::function<int(const Arrow&)> label;

    struct Obj {
        int x = 0;
        typename Fib::Obj A;
        bool operator==(const Obj& o) const { return x == o.x && A == o.A; }
    };

    struct Mor {
        Obj src, tgt;
        std::map<Arrow, typename Fib::Mor> terms;
        bool operator==(const Mor& o) const {
            return src == o.src && tgt == o.tgt && terms == o.terms;
        }
    };

    Hocolim(TransportGroupoid g, const Fib* f, std::function<int(const Arrow&)> lab)
        : gpd(std::move(g)), fib(f), label(std::move(lab)) {
        const FiniteGroup& lg = fib->group();
        for (const Arrow& a : gpd.all_arrows()) {
            int v = label(a);
            if (v < 0 || v >= lg.m) throw std::invalid_argument("hocolim: label out of range");
            if (!(label(gpd.inv(a)) == lg.inv(v)))
                throw std::invalid_argument("hocolim: label does not respect inverses");
            for (const Arrow& b : gpd.arrows_from(gpd.tgt(a)))
                if (label(gpd.compose(b, a)) != lg.mul(label(b), label(a)))
                    throw std::invalid_argument("hocolim: label is not a functor");
        }
        for (int x = 0; x < gpd.n_objects(); ++x)
            if (label(gpd.id(x)) != lg.e)
                throw std::invalid_argument("hocolim: label of an identity is not e");
    }

    Obj obj(int x, typename Fib::Obj a) const {
        if (x < 0 || x >= gpd.n_objects())
            throw std::invalid_argument("hocolim: object index out of range");
        return Obj{x, std::move(a)};
    }

    Mor zero(const Obj& a, const Obj& b) const { return Mor{a, b, {}}; }

    // adds one term, merging with an existing component at the same arrow
    void add_term(Mor& m, const Arrow& f, const typename Fib::Mor& t) const {
        if (f.src != m.src.x || gpd.tgt(f) != m.tgt.x)
            throw std::invalid_argument("hocolim: term arrow does not connect the endpoints");
        if (!(fib->mor_src(t) == m.src.A) ||
            !(fib->mor_tgt(t) == fib->act_obj(label(f), m.tgt.A)))
            throw std::invalid_argument("hocolim: term component has wrong endpoints");
        auto it = m.terms.find(f);
        if (it == m.terms.end()) {
            if (!fib->is_zero(t)) m.terms.emplace(f, t);
            return;
        }
        auto s = fib->add(it->second, t);
        if (fib->is_zero(s))
            m.terms.erase(it);
        else
            it->second = std::move(s);
    }

    Mor single(const Obj& a, const Obj& b, const Arrow& f, const typename Fib::Mor& t) const {
        Mor m = zero(a, b);
        add_term(m, f, t);
        return m;
    }

    Mor id(const Obj& a) const { return single(a, a, gpd.id(a.x), fib->id(a.A)); }

    Mor add(const Mor& m1, const Mor& m2) const {
        if (!(m1.src == m2.src) || !(m1.tgt == m2.tgt))
            throw std::invalid_argument("hocolim: adding morphisms with different endpoints");
        Mor out = m1;
        for (const auto& [f, t] : m2.terms) add_term(out, f, t);
        return out;
    }

    Mor compose(const Mor& m2, const Mor& m1) const {
        if (!(m2.src == m1.tgt))
            throw std::invalid_argument("hocolim: composing morphisms with mismatched endpoints");
        Mor out = zero(m1.src, m2.tgt);
        for (const auto& [f1, t1] : m1.terms)
            for (const auto& [f2, t2] : m2.terms) {
                Arrow h = gpd.compose(f2, f1);
                add_term(out, h, fib->compose(fib->act_mor(label(f1), t2), t1));
            }
        return out;
    }

    Obj dual_obj(const Obj& a) const { return Obj{a.x, fib->dual_obj(a.A)}; }

    Mor dual(const Mor& m) const {
        Mor out = zero(dual_obj(m.tgt), dual_obj(m.src));
        for (const auto& [h, t] : m.terms) {
            Arrow f = gpd.inv(h);
            int lf = label(f), lh = label(h);
            auto step = fib->compose(fib->act_mor(lf, fib->dual_mor(t)),
                                     fib->act_mor(lf, fib->T(lh, m.tgt.A)));
            add_term(out, f, step);
        }
        return out;
    }

    Mor e_mor(const Obj& a) const {
        return single(a, dual_obj(dual_obj(a)), gpd.id(a.x), fib->e_mor(a.A));
    }

    // f.id : (x, act(label f, B)) -> (y, B), and its inverse
    Mor transport_iso(const Arrow& f, const typename Fib::Obj& b) const {
        Obj src{f.src, fib->act_obj(label(f), b)};
        Obj tgt{gpd.tgt(f), b};
        return single(src, tgt, f, fib->id(src.A));
    }

    Mor transport_iso_inv(const Arrow& f, const typename Fib::Obj& b) const {
        Obj src{gpd.tgt(f), b};
        Obj tgt{f.src, fib->act_obj(label(f), b)};
        return single(src, tgt, gpd.inv(f), fib->id(b));
    }

    Obj sample_obj(Rng& rng) const {
        return Obj{rng.below(gpd.n_objects()), fib->sample_obj(rng)};
    }

    // a random morphism between the given endpoints, possibly multi-term
    Mor sample_mor(const Obj& a, const Obj& b, Rng& rng) const {
        Mor m = zero(a, b);
        auto fs = gpd.hom(a.x, b.x);
        for (const Arrow& f : fs)
            if (rng.below(2) == 0)
                add_term(m, f, fib->sample_mor(a.A, fib->act_obj(label(f), b.A), rng));
        if (m.terms.empty() && !fs.empty()) {
            const Arrow& f = fs[rng.below((int)fs.size())];
            add_term(m, f, fib->sample_mor(a.A, fib->act_obj(label(f), b.A), rng));
        }
        return m;
    }
};

// Pushforward along a groupoid functor w: src.gpd -> tgt.gpd covering the
// identity on fibers; requires tgt.label(w(f)) == src.label(f). Terms with
// the same image arrow merge by addition.
template <class Fib>
typename Hocolim<Fib>::Obj push_obj(const Hocolim<Fib>& src, const Hocolim<Fib>& tgt,
                                    const GroupoidFunctor& w,
                                    const typename Hocolim<Fib>::Obj& a) {
    (void)src;
    return typename Hocolim<Fib>::Obj{w.obj(a.x), a.A};
}

template <class Fib>
typename Hocolim<Fib>::Mor push_mor(const Hocolim<Fib>& src, const Hocolim<Fib>& tgt,
                                    const GroupoidFunctor& w,
                                    const typename Hocolim<Fib>::Mor& m) {
    auto out = tgt.zero(push_obj(src, tgt, w, m.src), push_obj(src, tgt, w, m.tgt));
    for (const auto& [f, t] : m.terms) {
        Arrow u = w.arrow(f);
        if (tgt.label(u) != src.label(f))
            throw std::invalid_argument("push_mor: functor does not preserve labels");
        tgt.add_term(out, u, t);
    }
    return out;
}

// A family S of endofunctors of the fiber, one per groupoid object,
// strictly commuting with the gluing action. validate_ checks the
// functor laws and the commutation squares on samples and throws on
// violation.
template <class Fib>
struct FiberTransformation {
    std::function<typename Fib::Obj(int, const typename Fib::Obj&)> obj;
    std::function<typename Fib::Mor(int, const typename Fib::Mor&)> mor;
};

template <class Fib>
void validate_fiber_transformation(const Hocolim<Fib>& h, const FiberTransformation<Fib>& s,
                                   int samples, Rng& rng) {
    const Fib& fib = *h.fib;
    for (int i = 0; i < samples; ++i) {
        auto a = fib.sample_obj(rng);
        auto b = fib.sample_obj(rng);
        auto c = fib.sample_obj(rng);
        auto f = fib.sample_mor(a, b, rng);
        auto g = fib.sample_mor(b, c, rng);
        for (int x = 0; x < h.gpd.n_objects(); ++x) {
            if (!(s.mor(x, fib.id(a)) == fib.id(s.obj(x, a))))
                throw std::invalid_argument("fiber transformation: S(x) does not preserve identities");
            if (!(s.mor(x, fib.compose(g, f)) == fib.compose(s.mor(x, g), s.mor(x, f))))
                throw std::invalid_argument("fiber transformation: S(x) does not preserve composition");
        }
        for (const Arrow& f0 : h.gpd.all_arrows()) {
            int x = f0.src, y = h.gpd.tgt(f0), l = h.label(f0);
            if (!(s.obj(x, fib.act_obj(l, a)) == fib.act_obj(l, s.obj(y, a))))
                throw std::invalid_argument("fiber transformation: object square does not commute");
            if (!(s.mor(x, fib.act_mor(l, f)) == fib.act_mor(l, s.mor(y, f))))
                throw std::invalid_argument("fiber transformation: morphism square does not commute");
        }
    }
}

template <class Fib>
typename Hocolim<Fib>::Obj map_obj(const Hocolim<Fib>& h, const FiberTransformation<Fib>& s,
                                   const typename Hocolim<Fib>::Obj& a) {
    return typename Hocolim<Fib>::Obj{a.x, s.obj(a.x, a.A)};
}

template <class Fib>
typename Hocolim<Fib>::Mor map_mor(const Hocolim<Fib>& h, const FiberTransformation<Fib>& s,
                                   const typename Hocolim<Fib>::Mor& m) {
    auto out = h.zero(map_obj(h, s, m.src), map_obj(h, s, m.tgt));
    for (const auto& [f, t] : m.terms) h.add_term(out, f, s.mor(m.src.x, t));
    return out;
}

// Finite direct sums over a fiber: objects are tuples of fiber objects
// (the empty tuple is the zero object), morphisms are block matrices,
// blocks[i * |tgt| + j] : src_i -> tgt_j. Concatenation makes the sum
// strictly associative, and the involution acts blockwise with a block
// transpose.
template <class Fib>
struct Oplus {
    const Fib* fib = nullptr;

    struct Obj {
        std::vector<typename Fib::Obj> parts;
        bool operator==(const Obj& o) const { return parts == o.parts; }
    };

    struct Mor {
        Obj src, tgt;
        std::vector<typename Fib::Mor> blocks;
        bool operator==(const Mor& o) const {
            return src == o.src && tgt == o.tgt && blocks == o.blocks;
        }
    };

    Obj zero_obj() const { return Obj{}; }
    Obj single(typename Fib::Obj a) const { return Obj{{std::move(a)}}; }
    Obj dsum(const Obj& a, const Obj& b) const {
        Obj o = a;
        o.parts.insert(o.parts.end(), b.parts.begin(), b.parts.end());
        return o;
    }

    Mor zero(const Obj& a, const Obj& b) const {
        Mor m{a, b, {}};
        m.blocks.reserve(a.parts.size() * b.parts.size());
        for (const auto& p : a.parts)
            for (const auto& q : b.parts) m.blocks.push_back(fib->zero_mor(p, q));
        return m;
    }

    Mor id(const Obj& a) const {
        Mor m = zero(a, a);
        for (size_t i = 0; i < a.parts.size(); ++i)
            m.blocks[i * a.parts.size() + i] = fib->id(a.parts[i]);
        return m;
    }

    Mor q(const typename Fib::Mor& f) const {
        return Mor{single(fib->mor_src(f)), single(fib->mor_tgt(f)), {f}};
    }

    Mor compose(const Mor& m2, const Mor& m1) const {
        if (!(m2.src == m1.tgt))
            throw std::invalid_argument("oplus: composing morphisms with mismatched endpoints");
        Mor out = zero(m1.src, m2.tgt);
        size_t ni = m1.src.parts.size(), nj = m1.tgt.parts.size(), nk = m2.tgt.parts.size();
        for (size_t i = 0; i < ni; ++i)
            for (size_t k = 0; k < nk; ++k)
                for (size_t j = 0; j < nj; ++j)
                    out.blocks[i * nk + k] =
                        fib->add(out.blocks[i * nk + k],
                                 fib->compose(m2.blocks[j * nk + k], m1.blocks[i * nj + j]));
        return out;
    }

    Mor add(const Mor& m1, const Mor& m2) const {
        if (!(m1.src == m2.src) || !(m1.tgt == m2.tgt))
            throw std::invalid_argument("oplus: adding morphisms with different endpoints");
        Mor out = m1;
        for (size_t i = 0; i < out.blocks.size(); ++i)
            out.blocks[i] = fib->add(out.blocks[i], m2.blocks[i]);
        return out;
    }

    Mor dsum_mor(const Mor& f, const Mor& g) const {
        Mor out = zero(dsum(f.src, g.src), dsum(f.tgt, g.tgt));
        size_t fi = f.src.parts.size(), fj = f.tgt.parts.size();
        size_t gj = g.tgt.parts.size(), nj = fj + gj;
        for (size_t i = 0; i < fi; ++i)
            for (size_t j = 0; j < fj; ++j) out.blocks[i * nj + j] = f.blocks[i * fj + j];
        for (size_t i = 0; i < g.src.parts.size(); ++i)
            for (size_t j = 0; j < gj; ++j)
                out.blocks[(fi + i) * nj + (fj + j)] = g.blocks[i * gj + j];
        return out;
    }

    Obj dual_obj(const Obj& a) const {
        Obj o;
        o.parts.reserve(a.parts.size());
        for (const auto& p : a.parts) o.parts.push_back(fib->dual_obj(p));
        return o;
    }

    Mor dual(const Mor& m) const {
        Mor out = zero(dual_obj(m.tgt), dual_obj(m.src));
        size_t ni = m.src.parts.size(), nj = m.tgt.parts.size();
        for (size_t i = 0; i < ni; ++i)
            for (size_t j = 0; j < nj; ++j)
                out.blocks[j * ni + i] = fib->dual_mor(m.blocks[i * nj + j]);
        return out;
    }

    Mor e_mor(const Obj& a) const {
        Mor out = zero(a, dual_obj(dual_obj(a)));
        for (size_t i = 0; i < a.parts.size(); ++i)
            out.blocks[i * a.parts.size() + i] = fib->e_mor(a.parts[i]);
        return out;
    }
};

// The strictified module category of a twist as a fiber over its own
// group: objects (A, g), action by right label translation, involution
// from the twisted duality. T is the identity since the action is
// strict.
struct SCatFiber {
    const TwistData* t = nullptr;
    WeakActionData wa;
    int max_rank = 2;

    using Obj = SObj;
    using Mor = SMor;

    const FiniteGroup& group() const { return t->G; }

    Obj act_obj(int a, const Obj& x) const { return strict_obj(wa, a, x); }
    Mor act_mor(int a, const Mor& f) const { return strict_act(wa, a, f); }
    Mor id(const Obj& x) const { return s_id(wa, x); }
    Mor compose(const Mor& f2, const Mor& f1) const { return s_compose(wa, f2, f1); }
    Mor add(const Mor& f1, const Mor& f2) const;
    Mor zero_mor(const Obj& a, const Obj& b) const;
    bool is_zero(const Mor& f) const;
    Obj mor_src(const Mor& f) const { return f.src; }
    Obj mor_tgt(const Mor& f) const { return f.tgt; }
    Obj dual_obj(const Obj& x) const { return i_s_obj(*t, x); }
    Mor dual_mor(const Mor& f) const { return i_s_mor(*t, wa, f); }
    Mor e_mor(const Obj& x) const { return e_s_mor(*t, wa, x); }
    Mor T(int a, const Obj& x) const { return s_id(wa, act_obj(a, dual_obj(x))); }
    Obj sample_obj(Rng& rng) const;
    Mor sample_mor(const Obj& a, const Obj& b, Rng& rng) const;
};

SCatFiber make_scat_fiber(const TwistData& t, int max_rank);

// The homotopy colimit of a strict fiber over the transport groupoid of
// a left K-set, seen as a fiber for an outer colimit through a right
// G-action on the points commuting with K. Arrows relabel, components
// are untouched.
struct HKFiber {
    const Hocolim<SCatFiber>* inner = nullptr;
    const FiniteGroup* right_group = nullptr;
    std::vector<int> right_;  // y * |G| + g

    using Obj = Hocolim<SCatFiber>::Obj;
    using Mor = Hocolim<SCatFiber>::Mor;

    int right(int y, int g) const { return right_[y * right_group->m + g]; }
    const FiniteGroup& group() const { return *right_group; }

    Obj act_obj(int g, const Obj& o) const { return Obj{right(o.x, g), o.A}; }
    Mor act_mor(int g, const Mor& m) const;
    Mor id(const Obj& o) const { return inner->id(o); }
    Mor compose(const Mor& f2, const Mor& f1) const { return inner->compose(f2, f1); }
    Mor add(const Mor& f1, const Mor& f2) const { return inner->add(f1, f2); }
    Mor zero_mor(const Obj& a, const Obj& b) const { return inner->zero(a, b); }
    bool is_zero(const Mor& f) const { return f.terms.empty(); }
    Obj mor_src(const Mor& f) const { return f.src; }
    Obj mor_tgt(const Mor& f) const { return f.tgt; }
    Obj dual_obj(const Obj& o) const { return inner->dual_obj(o); }
    Mor dual_mor(const Mor& f) const { return inner->dual(f); }
    Mor e_mor(const Obj& o) const { return inner->e_mor(o); }
    Mor T(int g, const Obj& o) const { return inner->id(act_obj(g, dual_obj(o))); }
    Obj sample_obj(Rng& rng) const { return inner->sample_obj(rng); }
    Mor sample_mor(const Obj& a, const Obj& b, Rng& rng) const {
        return inner->sample_mor(a, b, rng);
    }
};

HKFiber make_hk_fiber(const Hocolim<SCatFiber>& inner, const Biset& eta);

// the SMor with the given matrix between the plain underlying modules
SMor scat_mor_from_mat(const SCatFiber& fib, const SObj& a, const SObj& b, Mat m);

// every morphism a -> b of an SCatFiber colimit, or empty when their
// number exceeds `limit`
std::vector<Hocolim<SCatFiber>::Mor> enumerate_homs(const Hocolim<SCatFiber>& h,
                                                    const Hocolim<SCatFiber>::Obj& a,
                                                    const Hocolim<SCatFiber>::Obj& b,
                                                    long long limit);

std::string hc_mor_string(const Hocolim<SCatFiber>& h, const Hocolim<SCatFiber>::Mor& m);

// Law suite over the one-object groupoid of the twist's group and over
// the transport groupoid of the regular action, including pushforward,
// fiberwise maps and the direct-sum completion. Produces hc.* and
// oplus.* records.
Report verify_hocolim(const TwistData& t, int max_rank, uint64_t seed);

}  // namespace xprod
