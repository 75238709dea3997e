#include "xprod/hocolim.hpp"

#include <stdexcept>
#include <string>

namespace xprod {

// --------------------------------------------------------------------------
// SCatFiber

SMor SCatFiber::add(const SMor& f1, const SMor& f2) const {
    if (!(f1.src == f2.src) || !(f1.tgt == f2.tgt))
        throw std::invalid_argument("SCatFiber::add: endpoint mismatch");
    return SMor{f1.src, f1.tgt, gen_add(t->R, f1.mor, f2.mor)};
}

SMor SCatFiber::zero_mor(const Obj& a, const Obj& b) const {
    GenMor m{s_underlying(wa, a), s_underlying(wa, b), Mat::zero(a.A.rank, b.A.rank)};
    return SMor{a, b, std::move(m)};
}

bool SCatFiber::is_zero(const Mor& f) const {
    for (int v : f.mor.mat.a)
        if (v != t->R.zero()) return false;
    return true;
}

SObj SCatFiber::sample_obj(Rng& rng) const {
    int rank = 1 + rng.below(max_rank);
    return SObj{gen_plain(t->R, rank), rng.below(t->G.m)};
}

SMor SCatFiber::sample_mor(const Obj& a, const Obj& b, Rng& rng) const {
    GenMor m{s_underlying(wa, a), s_underlying(wa, b),
             mat_random(t->R, a.A.rank, b.A.rank, rng)};
    return SMor{a, b, std::move(m)};
}

SCatFiber make_scat_fiber(const TwistData& t, int max_rank) {
    SCatFiber f;
    f.t = &t;
    f.wa = weak_action_from_twist(t);
    f.max_rank = max_rank;
    return f;
}

// --------------------------------------------------------------------------
// HKFiber

HKFiber::Mor HKFiber::act_mor(int g, const Mor& m) const {
    Mor out = inner->zero(act_obj(g, m.src), act_obj(g, m.tgt));
    for (const auto& [f, c] : m.terms) inner->add_term(out, Arrow{f.g, right(f.src, g)}, c);
    return out;
}

// eta (and the inner colimit) must outlive the fiber; only tables are copied.
HKFiber make_hk_fiber(const Hocolim<SCatFiber>& inner, const Biset& eta) {
    if (!(inner.gpd.X == eta.left_gset()))
        throw std::invalid_argument("make_hk_fiber: inner colimit is not glued over the biset");
    HKFiber f;
    f.inner = &inner;
    f.right_group = &eta.G;
    f.right_ = eta.right_;
    return f;
}

// --------------------------------------------------------------------------
// law suite

using HC = Hocolim<SCatFiber>;

std::string hc_mor_string(const HC& h, const HC::Mor& m) {
    const FiniteRing& r = h.fib->t->R;
    const FiniteGroup& gg = h.gpd.X.G;
    std::string s = "{";
    bool first = true;
    for (const auto& [f, c] : m.terms) {
        if (!first) s += ", ";
        first = false;
        s += "(" + gg.name(f.g) + "@" + std::to_string(f.src) + "): " + mat_to_string(r, c.mor.mat);
    }
    return s + "}";
}

SMor scat_mor_from_mat(const SCatFiber& fib, const SObj& a, const SObj& b, Mat m) {
    GenMor g{s_underlying(fib.wa, a), s_underlying(fib.wa, b), std::move(m)};
    return SMor{a, b, std::move(g)};
}

std::vector<HC::Mor> enumerate_homs(const HC& h, const HC::Obj& a, const HC::Obj& b,
                                    long long limit) {
    const SCatFiber& fib = *h.fib;
    int rn = fib.t->R.size();
    auto arrows = h.gpd.hom(a.x, b.x);
    long long entries = (long long)arrows.size() * a.A.A.rank * b.A.A.rank;
    long long count = 1;
    for (long long i = 0; i < entries; ++i) {
        count *= rn;
        if (count > limit) return {};
    }
    std::vector<HC::Mor> out;
    out.reserve((size_t)count);
    std::vector<int> digits((size_t)entries, 0);
    for (long long idx = 0; idx < count; ++idx) {
        HC::Mor m = h.zero(a, b);
        int pos = 0;
        for (const Arrow& f : arrows) {
            Mat mat = Mat::zero(a.A.A.rank, b.A.A.rank);
            for (int& v : mat.a) v = digits[pos++];
            h.add_term(m, f, scat_mor_from_mat(fib, a.A, fib.act_obj(h.label(f), b.A), std::move(mat)));
        }
        out.push_back(std::move(m));
        for (int i = 0; i < entries; ++i) {
            if (++digits[i] < rn) break;
            digits[i] = 0;
        }
    }
    return out;
}

namespace {

using OP = Oplus<SCatFiber>;

bool contains_mor(const std::vector<HC::Mor>& v, const HC::Mor& m) {
    for (const auto& x : v)
        if (x == m) return true;
    return false;
}

}  // namespace

Report verify_hocolim(const TwistData& t, int max_rank, uint64_t seed) {
    Report rep;
    rep.seed = seed;
    Rng rng(seed);
    const FiniteGroup& G = t.G;
    const FiniteRing& R = t.R;
    SCatFiber fib = make_scat_fiber(t, max_rank);

    auto glabel = [](const Arrow& f) { return f.g; };
    HC hpt(transport_groupoid(GSet::one_point(G)), &fib, glabel);
    HC hreg(transport_groupoid(GSet::regular(G)), &fib, glabel);
    const HC* hs[2] = {&hpt, &hreg};
    const int samples = 50;

    // category laws ---------------------------------------------------------
    {
        CheckRecord rec{"hc.id_unit", "id . phi = phi = phi . id, and 0 . phi = 0"};
        for (int gi = 0; gi < 2 && rec.pass; ++gi) {
            const HC& h = *hs[gi];
            for (int s = 0; s < samples && rec.pass; ++s) {
                auto a = h.sample_obj(rng), b = h.sample_obj(rng), c = h.sample_obj(rng);
                auto f = h.sample_mor(a, b, rng);
                auto l = h.compose(f, h.id(a));
                auto r0 = h.compose(h.id(b), f);
                auto z = h.compose(h.zero(b, c), f);
                if (!(l == f) || !(r0 == f) || !(z == h.zero(a, c))) {
                    rec.pass = false;
                    rec.witness = {gi, s};
                    rec.witness_desc = "groupoid index, sample";
                    rec.lhs = hc_mor_string(h, l);
                    rec.rhs = hc_mor_string(h, f);
                }
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.assoc", "(chi . psi) . phi = chi . (psi . phi)"};
        // exhaustive triples at rank 1 over the one-object groupoid when small
        SObj pa{gen_plain(R, 1), G.e};
        SObj pb{gen_plain(R, 1), (1 % G.m)};
        auto oa = hpt.obj(0, pa), ob = hpt.obj(0, pb);
        auto h1 = enumerate_homs(hpt, oa, ob, 30);
        if (!h1.empty() && (long long)h1.size() * h1.size() * h1.size() <= 30000) {
            auto h2 = enumerate_homs(hpt, ob, oa, 30);
            for (const auto& f : h1)
                for (const auto& g : h2)
                    for (const auto& k : h1) {
                        if (!rec.pass) break;
                        auto l = hpt.compose(hpt.compose(k, g), f);
                        auto r0 = hpt.compose(k, hpt.compose(g, f));
                        if (!(l == r0)) {
                            rec.pass = false;
                            rec.witness_desc = "exhaustive rank-1 triple";
                            rec.lhs = hc_mor_string(hpt, l);
                            rec.rhs = hc_mor_string(hpt, r0);
                        }
                    }
        }
        for (int gi = 0; gi < 2 && rec.pass; ++gi) {
            const HC& h = *hs[gi];
            for (int s = 0; s < samples && rec.pass; ++s) {
                auto a = h.sample_obj(rng), b = h.sample_obj(rng);
                auto c = h.sample_obj(rng), d = h.sample_obj(rng);
                auto f = h.sample_mor(a, b, rng);
                auto g = h.sample_mor(b, c, rng);
                auto k = h.sample_mor(c, d, rng);
                auto l = h.compose(h.compose(k, g), f);
                auto r0 = h.compose(k, h.compose(g, f));
                if (!(l == r0)) {
                    rec.pass = false;
                    rec.witness = {gi, s};
                    rec.witness_desc = "groupoid index, sample";
                    rec.lhs = hc_mor_string(h, l);
                    rec.rhs = hc_mor_string(h, r0);
                }
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.bilinear",
                        "(psi1 + psi2) . phi = psi1 . phi + psi2 . phi and symmetrically"};
        for (int gi = 0; gi < 2 && rec.pass; ++gi) {
            const HC& h = *hs[gi];
            for (int s = 0; s < samples && rec.pass; ++s) {
                auto a = h.sample_obj(rng), b = h.sample_obj(rng), c = h.sample_obj(rng);
                auto f = h.sample_mor(a, b, rng);
                auto p1 = h.sample_mor(b, c, rng), p2 = h.sample_mor(b, c, rng);
                auto l = h.compose(h.add(p1, p2), f);
                auto r0 = h.add(h.compose(p1, f), h.compose(p2, f));
                auto f2 = h.sample_mor(c, a, rng);
                auto l2 = h.compose(f2, h.add(p1, p2));
                auto r2 = h.add(h.compose(f2, p1), h.compose(f2, p2));
                if (!(l == r0) || !(l2 == r2)) {
                    rec.pass = false;
                    rec.witness = {gi, s};
                    rec.witness_desc = "groupoid index, sample";
                    rec.lhs = hc_mor_string(h, l);
                    rec.rhs = hc_mor_string(h, r0);
                }
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.decisive",
                        "(g.psi) . (f.phi) = (g o f).(act(label f, psi) o phi) on single terms"};
        for (int gi = 0; gi < 2 && rec.pass; ++gi) {
            const HC& h = *hs[gi];
            for (int s = 0; s < samples && rec.pass; ++s) {
                auto a = h.sample_obj(rng), b = h.sample_obj(rng), c = h.sample_obj(rng);
                auto fs = h.gpd.hom(a.x, b.x);
                auto gs = h.gpd.hom(b.x, c.x);
                Arrow f = fs[rng.below((int)fs.size())];
                Arrow g = gs[rng.below((int)gs.size())];
                auto phi = fib.sample_mor(a.A, fib.act_obj(h.label(f), b.A), rng);
                auto psi = fib.sample_mor(b.A, fib.act_obj(h.label(g), c.A), rng);
                auto l = h.compose(h.single(b, c, g, psi), h.single(a, b, f, phi));
                auto r0 = h.single(a, c, h.gpd.compose(g, f),
                                   fib.compose(fib.act_mor(h.label(f), psi), phi));
                if (!(l == r0)) {
                    rec.pass = false;
                    rec.witness = {gi, s, f.g, g.g};
                    rec.witness_desc = "groupoid index, sample, label f, label g";
                    rec.lhs = hc_mor_string(h, l);
                    rec.rhs = hc_mor_string(h, r0);
                }
            }
        }
        rep.add(rec);
    }

    // involution ------------------------------------------------------------
    {
        CheckRecord rec{"hc.dual_contravariant", "(psi . phi)* = phi* . psi*"};
        for (int gi = 0; gi < 2 && rec.pass; ++gi) {
            const HC& h = *hs[gi];
            for (int s = 0; s < samples && rec.pass; ++s) {
                auto a = h.sample_obj(rng), b = h.sample_obj(rng), c = h.sample_obj(rng);
                auto f = h.sample_mor(a, b, rng);
                auto g = h.sample_mor(b, c, rng);
                auto l = h.dual(h.compose(g, f));
                auto r0 = h.compose(h.dual(f), h.dual(g));
                if (!(l == r0)) {
                    rec.pass = false;
                    rec.witness = {gi, s};
                    rec.witness_desc = "groupoid index, sample";
                    rec.lhs = hc_mor_string(h, l);
                    rec.rhs = hc_mor_string(h, r0);
                }
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.dual_involutive", "phi** = phi"};
        for (int gi = 0; gi < 2 && rec.pass; ++gi) {
            const HC& h = *hs[gi];
            for (int s = 0; s < samples && rec.pass; ++s) {
                auto a = h.sample_obj(rng), b = h.sample_obj(rng);
                auto f = h.sample_mor(a, b, rng);
                auto l = h.dual(h.dual(f));
                if (!(l == f)) {
                    rec.pass = false;
                    rec.witness = {gi, s};
                    rec.witness_desc = "groupoid index, sample";
                    rec.lhs = hc_mor_string(h, l);
                    rec.rhs = hc_mor_string(h, f);
                }
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.E_natural", "E(y) . phi = phi** . E(x)"};
        for (int gi = 0; gi < 2 && rec.pass; ++gi) {
            const HC& h = *hs[gi];
            for (int s = 0; s < samples && rec.pass; ++s) {
                auto a = h.sample_obj(rng), b = h.sample_obj(rng);
                auto f = h.sample_mor(a, b, rng);
                auto l = h.compose(h.e_mor(b), f);
                auto r0 = h.compose(h.dual(h.dual(f)), h.e_mor(a));
                if (!(l == r0)) {
                    rec.pass = false;
                    rec.witness = {gi, s};
                    rec.witness_desc = "groupoid index, sample";
                    rec.lhs = hc_mor_string(h, l);
                    rec.rhs = hc_mor_string(h, r0);
                }
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.E_condition", "E(x)* is a two-sided inverse of E(x*)"};
        for (int gi = 0; gi < 2 && rec.pass; ++gi) {
            const HC& h = *hs[gi];
            for (int s = 0; s < samples && rec.pass; ++s) {
                auto a = h.sample_obj(rng);
                auto ad = h.dual_obj(a);
                auto de = h.dual(h.e_mor(a));           // a*** -> a*
                auto ed = h.e_mor(ad);                  // a* -> a***
                auto c1 = h.compose(de, ed);
                auto c2 = h.compose(ed, de);
                auto a3 = h.dual_obj(h.dual_obj(ad));
                if (!(c1 == h.id(ad)) || !(c2 == h.id(a3))) {
                    rec.pass = false;
                    rec.witness = {gi, s, (long long)a.x, a.A.g};
                    rec.witness_desc = "groupoid index, sample, point, fiber label";
                    rec.lhs = hc_mor_string(h, c1);
                    rec.rhs = hc_mor_string(h, h.id(ad));
                }
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.transport_iso",
                        "f.id : (x, act(label f, B)) -> (y, B) is an isomorphism"};
        for (int gi = 0; gi < 2 && rec.pass; ++gi) {
            const HC& h = *hs[gi];
            auto arrows = h.gpd.all_arrows();
            for (int s = 0; s < samples && rec.pass; ++s) {
                Arrow f = arrows[rng.below((int)arrows.size())];
                auto b = fib.sample_obj(rng);
                auto i = h.transport_iso(f, b);
                auto j = h.transport_iso_inv(f, b);
                auto c1 = h.compose(j, i);
                auto c2 = h.compose(i, j);
                if (!(c1 == h.id(i.src)) || !(c2 == h.id(j.src))) {
                    rec.pass = false;
                    rec.witness = {gi, s, f.g, f.src};
                    rec.witness_desc = "groupoid index, sample, arrow label, arrow source";
                    rec.lhs = hc_mor_string(h, c1);
                    rec.rhs = hc_mor_string(h, c2);
                }
            }
        }
        rep.add(rec);
    }

    // pushforward -----------------------------------------------------------
    {
        CheckRecord rec{"hc.pushforward_id", "(id)_* = id"};
        auto w = identity_functor(hreg.gpd);
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = hreg.sample_obj(rng), b = hreg.sample_obj(rng);
            auto f = hreg.sample_mor(a, b, rng);
            auto l = push_mor(hreg, hreg, w, f);
            if (!(l == f)) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
                rec.lhs = hc_mor_string(hreg, l);
                rec.rhs = hc_mor_string(hreg, f);
            }
        }
        rep.add(rec);
    }

    // w1: right translation on the regular action, w2: collapse to a point
    GSet regular = GSet::regular(G);
    GSet point = GSet::one_point(G);
    std::vector<int> rho(G.m), zeros(G.m, 0);
    int shift = 1 % G.m;
    for (int x = 0; x < G.m; ++x) rho[x] = G.mul(x, shift);
    auto w1 = transport_of_gmap(regular, regular, rho);
    auto w2 = transport_of_gmap(regular, point, zeros);
    {
        CheckRecord rec{"hc.pushforward_comp", "(w2 o w1)_* = (w2)_* . (w1)_*"};
        auto w21 = compose_functors(w2, w1);
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = hreg.sample_obj(rng), b = hreg.sample_obj(rng);
            auto f = hreg.sample_mor(a, b, rng);
            auto l = push_mor(hreg, hpt, w21, f);
            auto r0 = push_mor(hreg, hpt, w2, push_mor(hreg, hreg, w1, f));
            if (!(l == r0)) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
                rec.lhs = hc_mor_string(hpt, l);
                rec.rhs = hc_mor_string(hpt, r0);
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.pushforward_dual", "w_*(phi*) = (w_* phi)*"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = hreg.sample_obj(rng), b = hreg.sample_obj(rng);
            auto f = hreg.sample_mor(a, b, rng);
            auto l = push_mor(hreg, hpt, w2, hreg.dual(f));
            auto r0 = hpt.dual(push_mor(hreg, hpt, w2, f));
            if (!(l == r0)) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
                rec.lhs = hc_mor_string(hpt, l);
                rec.rhs = hc_mor_string(hpt, r0);
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.pushforward_merge",
                        "terms with the same image arrow merge by addition"};
        // one-object groupoid over G x Z/2, projected onto its first factor
        FiniteGroup c2 = FiniteGroup::cyclic(2);
        FiniteGroup k = FiniteGroup::product(G, c2);
        HC hk(transport_groupoid(GSet::one_point(k)), &fib,
              [](const Arrow& f) { return f.g / 2; });
        auto wm = make_groupoid_functor(hk.gpd, hpt.gpd, {0},
                                        [](const Arrow& f) { return Arrow{f.g / 2, 0}; });
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto af = fib.sample_obj(rng);
            auto bf = fib.sample_obj(rng);
            auto a = hk.obj(0, af), b = hk.obj(0, bf);
            int g = rng.below(G.m);
            Arrow f1{g * 2 + 0, 0}, f2{g * 2 + 1, 0};
            auto c1 = fib.sample_mor(af, fib.act_obj(g, bf), rng);
            auto cc2 = fib.sample_mor(af, fib.act_obj(g, bf), rng);
            auto s1 = hk.single(a, b, f1, c1);
            auto s2 = hk.single(a, b, f2, cc2);
            auto l = push_mor(hk, hpt, wm, hk.add(s1, s2));
            auto r0 = hpt.add(push_mor(hk, hpt, wm, s1), push_mor(hk, hpt, wm, s2));
            auto direct = hpt.single(hpt.obj(0, af), hpt.obj(0, bf), Arrow{g, 0},
                                     fib.add(c1, cc2));
            if (!(l == r0) || !(l == direct) || l.terms.size() > 1) {
                rec.pass = false;
                rec.witness = {s, g};
                rec.witness_desc = "sample, common label";
                rec.lhs = hc_mor_string(hpt, l);
                rec.rhs = hc_mor_string(hpt, direct);
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.pushforward_equivalence",
                        "collapsing a contractible base is bijective on hom sets"};
        // constant gluing over the regular action, collapsed to the trivial groupoid
        HC hcontr(transport_groupoid(regular), &fib, [&G](const Arrow&) { return G.e; });
        FiniteGroup c1 = FiniteGroup::cyclic(1);
        GSet tpoint = GSet::one_point(c1);
        HC htriv(transport_groupoid(tpoint), &fib, [&G](const Arrow&) { return G.e; });
        auto wc = make_groupoid_functor(hcontr.gpd, htriv.gpd, std::vector<int>(G.m, 0),
                                        [](const Arrow&) { return Arrow{0, 0}; });
        if (!is_groupoid_equivalence(wc)) {
            rec.pass = false;
            rec.witness_desc = "base functor is not an equivalence";
        }
        // rank-1 hom sets, exhaustively
        SObj pa{gen_plain(R, 1), G.e};
        SObj pb{gen_plain(R, 1), 1 % G.m};
        auto a = hcontr.obj(0, pa);
        auto b = hcontr.obj(G.m > 1 ? 1 : 0, pb);
        auto srcs = enumerate_homs(hcontr, a, b, 4096);
        auto tgts = enumerate_homs(htriv, htriv.obj(0, pa), htriv.obj(0, pb), 4096);
        if (rec.pass && !srcs.empty() && !tgts.empty()) {
            std::vector<HC::Mor> images;
            for (const auto& f : srcs) {
                auto u = push_mor(hcontr, htriv, wc, f);
                if (contains_mor(images, u)) {
                    rec.pass = false;
                    rec.witness_desc = "two morphisms pushed to the same image";
                    rec.lhs = hc_mor_string(htriv, u);
                    break;
                }
                images.push_back(std::move(u));
            }
            if (rec.pass && images.size() != tgts.size()) {
                rec.pass = false;
                rec.witness = {(long long)images.size(), (long long)tgts.size()};
                rec.witness_desc = "image count, target hom size";
            }
        }
        for (int s = 0; rec.pass && s < samples; ++s) {  // sampled injectivity at full rank
            auto oa = hcontr.sample_obj(rng), ob = hcontr.sample_obj(rng);
            auto f = hcontr.sample_mor(oa, ob, rng);
            auto g = hcontr.sample_mor(oa, ob, rng);
            bool same_push = push_mor(hcontr, htriv, wc, f) == push_mor(hcontr, htriv, wc, g);
            if (same_push != (f == g)) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
                rec.lhs = hc_mor_string(hcontr, f);
                rec.rhs = hc_mor_string(hcontr, g);
            }
        }
        rep.add(rec);
    }

    // fiberwise maps ----------------------------------------------------------
    std::vector<int> central;
    for (int a = 0; a < G.m; ++a) {
        bool ok = true;
        for (int g = 0; g < G.m; ++g)
            if (G.mul(a, g) != G.mul(g, a)) ok = false;
        if (ok) central.push_back(a);
    }
    int a1 = central.size() > 1 ? central[1] : central[0];
    int a2 = central.back();
    auto mk_s = [&fib](int a) {
        return FiberTransformation<SCatFiber>{
            [&fib, a](int, const SObj& x) { return fib.act_obj(a, x); },
            [&fib, a](int, const SMor& f) { return fib.act_mor(a, f); }};
    };
    auto s1 = mk_s(a1), s2 = mk_s(a2), s21 = mk_s(G.mul(a1, a2));
    {
        CheckRecord rec{"hc.intS_validate",
                        "the translation families S(x) = R_a are fiber transformations"};
        try {
            validate_fiber_transformation(hpt, s1, 8, rng);
            validate_fiber_transformation(hreg, s1, 8, rng);
            validate_fiber_transformation(hreg, s2, 8, rng);
        } catch (const std::exception& ex) {
            rec.pass = false;
            rec.witness = {a1, a2};
            rec.witness_desc = "translations used";
            rec.lhs = ex.what();
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.intS_id", "int(id) = id"};
        FiberTransformation<SCatFiber> sid{[](int, const SObj& x) { return x; },
                                           [](int, const SMor& f) { return f; }};
        for (int gi = 0; gi < 2 && rec.pass; ++gi) {
            const HC& h = *hs[gi];
            for (int s = 0; s < samples && rec.pass; ++s) {
                auto a = h.sample_obj(rng), b = h.sample_obj(rng);
                auto f = h.sample_mor(a, b, rng);
                if (!(map_mor(h, sid, f) == f)) {
                    rec.pass = false;
                    rec.witness = {gi, s};
                    rec.witness_desc = "groupoid index, sample";
                }
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.intS_comp", "int(S2) . int(S1) = int(S2 o S1)"};
        for (int gi = 0; gi < 2 && rec.pass; ++gi) {
            const HC& h = *hs[gi];
            for (int s = 0; s < samples && rec.pass; ++s) {
                auto a = h.sample_obj(rng), b = h.sample_obj(rng);
                auto f = h.sample_mor(a, b, rng);
                auto l = map_mor(h, s2, map_mor(h, s1, f));
                auto r0 = map_mor(h, s21, f);
                if (!(l == r0)) {
                    rec.pass = false;
                    rec.witness = {gi, s, a1, a2};
                    rec.witness_desc = "groupoid index, sample, a1, a2";
                    rec.lhs = hc_mor_string(h, l);
                    rec.rhs = hc_mor_string(h, r0);
                }
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.intS_involution", "int(S)(phi*) = (int(S) phi)*"};
        for (int gi = 0; gi < 2 && rec.pass; ++gi) {
            const HC& h = *hs[gi];
            for (int s = 0; s < samples && rec.pass; ++s) {
                auto a = h.sample_obj(rng), b = h.sample_obj(rng);
                auto f = h.sample_mor(a, b, rng);
                auto l = map_mor(h, s1, h.dual(f));
                auto r0 = h.dual(map_mor(h, s1, f));
                if (!(l == r0)) {
                    rec.pass = false;
                    rec.witness = {gi, s, a1};
                    rec.witness_desc = "groupoid index, sample, translation";
                    rec.lhs = hc_mor_string(h, l);
                    rec.rhs = hc_mor_string(h, r0);
                }
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.intS_equivalence",
                        "fiberwise equivalences give a hom-set bijection"};
        SObj pa{gen_plain(R, 1), G.e};
        SObj pb{gen_plain(R, 1), 1 % G.m};
        auto a = hpt.obj(0, pa), b = hpt.obj(0, pb);
        auto srcs = enumerate_homs(hpt, a, b, 20000);
        if (!srcs.empty()) {
            std::vector<HC::Mor> images;
            for (const auto& f : srcs) {
                auto u = map_mor(hpt, s1, f);
                if (contains_mor(images, u)) {
                    rec.pass = false;
                    rec.witness_desc = "two morphisms mapped to the same image";
                    rec.lhs = hc_mor_string(hpt, u);
                    break;
                }
                images.push_back(std::move(u));
            }
            if (rec.pass && images.size() != srcs.size()) {
                rec.pass = false;
                rec.witness = {(long long)images.size(), (long long)srcs.size()};
                rec.witness_desc = "image count, hom size";
            }
        } else {
            for (int s = 0; rec.pass && s < samples; ++s) {
                auto oa = hpt.sample_obj(rng), ob = hpt.sample_obj(rng);
                auto f = hpt.sample_mor(oa, ob, rng);
                auto g = hpt.sample_mor(oa, ob, rng);
                if ((map_mor(hpt, s1, f) == map_mor(hpt, s1, g)) != (f == g)) {
                    rec.pass = false;
                    rec.witness = {s};
                    rec.witness_desc = "sample";
                }
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"hc.WS_compat", "int(S) . w_* = w_* . int(S o w)"};
        auto wc = make_groupoid_functor(hreg.gpd, hpt.gpd, std::vector<int>(G.m, 0),
                                        [](const Arrow& f) { return Arrow{f.g, 0}; });
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = hreg.sample_obj(rng), b = hreg.sample_obj(rng);
            auto f = hreg.sample_mor(a, b, rng);
            auto l = map_mor(hpt, s1, push_mor(hreg, hpt, wc, f));
            auto r0 = push_mor(hreg, hpt, wc, map_mor(hreg, s1, f));
            if (!(l == r0)) {
                rec.pass = false;
                rec.witness = {s, a1};
                rec.witness_desc = "sample, translation";
                rec.lhs = hc_mor_string(hpt, l);
                rec.rhs = hc_mor_string(hpt, r0);
            }
        }
        rep.add(rec);
    }

    // direct-sum completion ---------------------------------------------------
    OP op{&fib};
    auto sample_op_obj = [&](Rng& r2, int maxparts) {
        OP::Obj o;
        int n = r2.below(maxparts + 1);
        for (int i = 0; i < n; ++i) o.parts.push_back(fib.sample_obj(r2));
        return o;
    };
    auto sample_op_mor = [&](const OP::Obj& a, const OP::Obj& b, Rng& r2) {
        OP::Mor m = op.zero(a, b);
        for (size_t i = 0; i < a.parts.size(); ++i)
            for (size_t j = 0; j < b.parts.size(); ++j)
                m.blocks[i * b.parts.size() + j] = fib.sample_mor(a.parts[i], b.parts[j], r2);
        return m;
    };
    {
        CheckRecord rec{"oplus.zero", "the empty sum is a zero object"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = sample_op_obj(rng, 2);
            auto z = op.zero_obj();
            bool ok = op.id(z) == op.zero(z, z);
            auto through = op.compose(op.zero(z, a), op.zero(a, z));  // a -> 0 -> a
            ok = ok && through == op.zero(a, a);
            if (!ok) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"oplus.assoc", "(A + B) + C = A + (B + C) on the nose"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = sample_op_obj(rng, 2), b = sample_op_obj(rng, 2), c = sample_op_obj(rng, 2);
            if (!(op.dsum(op.dsum(a, b), c) == op.dsum(a, op.dsum(b, c)))) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
            }
            auto a2 = sample_op_obj(rng, 2), b2 = sample_op_obj(rng, 2), c2 = sample_op_obj(rng, 2);
            auto f = sample_op_mor(a, a2, rng);
            auto g = sample_op_mor(b, b2, rng);
            auto k = sample_op_mor(c, c2, rng);
            if (!(op.dsum_mor(op.dsum_mor(f, g), k) == op.dsum_mor(f, op.dsum_mor(g, k)))) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"oplus.q_functor", "the singleton embedding is a fully faithful functor"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = fib.sample_obj(rng), b = fib.sample_obj(rng), c = fib.sample_obj(rng);
            auto f = fib.sample_mor(a, b, rng);
            auto g = fib.sample_mor(b, c, rng);
            bool ok = op.q(fib.compose(g, f)) == op.compose(op.q(g), op.q(f));
            ok = ok && op.q(fib.id(a)) == op.id(op.single(a));
            auto f2 = fib.sample_mor(a, b, rng);
            ok = ok && (op.q(f) == op.q(f2)) == (f == f2);
            if (!ok) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"oplus.category", "identities and associativity for block morphisms"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = sample_op_obj(rng, 2), b = sample_op_obj(rng, 2);
            auto c = sample_op_obj(rng, 2), d = sample_op_obj(rng, 2);
            auto f = sample_op_mor(a, b, rng);
            auto g = sample_op_mor(b, c, rng);
            auto k = sample_op_mor(c, d, rng);
            bool ok = op.compose(f, op.id(a)) == f && op.compose(op.id(b), f) == f;
            ok = ok && op.compose(op.compose(k, g), f) == op.compose(k, op.compose(g, f));
            if (!ok) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"oplus.dsum_compose", "(f2 + g2) . (f1 + g1) = f2 . f1 + g2 . g1"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = sample_op_obj(rng, 2), b = sample_op_obj(rng, 2), c = sample_op_obj(rng, 2);
            auto a2 = sample_op_obj(rng, 2), b2 = sample_op_obj(rng, 2), c2 = sample_op_obj(rng, 2);
            auto f1 = sample_op_mor(a, b, rng), f2 = sample_op_mor(b, c, rng);
            auto g1 = sample_op_mor(a2, b2, rng), g2 = sample_op_mor(b2, c2, rng);
            auto l = op.compose(op.dsum_mor(f2, g2), op.dsum_mor(f1, g1));
            auto r0 = op.dsum_mor(op.compose(f2, f1), op.compose(g2, g1));
            if (!(l == r0)) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"oplus.dual",
                        "blockwise involution: contravariant, involutive, E natural"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = sample_op_obj(rng, 2), b = sample_op_obj(rng, 2), c = sample_op_obj(rng, 2);
            auto f = sample_op_mor(a, b, rng);
            auto g = sample_op_mor(b, c, rng);
            bool ok = op.dual(op.compose(g, f)) == op.compose(op.dual(f), op.dual(g));
            ok = ok && op.dual(op.dual(f)) == f;
            ok = ok && op.compose(op.e_mor(b), f) == op.compose(op.dual(op.dual(f)), op.e_mor(a));
            if (!ok) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"oplus.flatten",
                        "block composition agrees with composition of assembled matrices"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            // parts share the label so assembly lands in one hom set
            auto mk_obj = [&](int nparts, std::vector<int>& ranks) {
                OP::Obj o;
                for (int i = 0; i < nparts; ++i) {
                    int r2 = 1 + rng.below(max_rank);
                    ranks.push_back(r2);
                    o.parts.push_back(SObj{gen_plain(R, r2), G.e});
                }
                return o;
            };
            std::vector<int> ra, rb, rc;
            auto a = mk_obj(1 + rng.below(2), ra);
            auto b = mk_obj(1 + rng.below(2), rb);
            auto c = mk_obj(1 + rng.below(2), rc);
            auto f = sample_op_mor(a, b, rng);
            auto g = sample_op_mor(b, c, rng);
            auto flatten = [&](const OP::Mor& m, const std::vector<int>& rs,
                              const std::vector<int>& ts) {
                int rtot = 0, ttot = 0;
                for (int v : rs) rtot += v;
                for (int v : ts) ttot += v;
                Mat big = Mat::zero(rtot, ttot);
                int roff = 0;
                for (size_t i = 0; i < rs.size(); ++i) {
                    int coff = 0;
                    for (size_t j = 0; j < ts.size(); ++j) {
                        const Mat& blk = m.blocks[i * ts.size() + j].mor.mat;
                        for (int p = 0; p < blk.rows; ++p)
                            for (int q = 0; q < blk.cols; ++q)
                                big.at(roff + p, coff + q) = blk.at(p, q);
                        coff += ts[j];
                    }
                    roff += rs[i];
                }
                SObj sa{gen_plain(R, rtot), G.e}, sb{gen_plain(R, ttot), G.e};
                return scat_mor_from_mat(fib, sa, sb, std::move(big));
            };
            auto l = flatten(op.compose(g, f), ra, rc);
            auto r0 = s_compose(fib.wa, flatten(g, rb, rc), flatten(f, ra, rb));
            if (!(l == r0)) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
                rec.lhs = mat_to_string(R, l.mor.mat);
                rec.rhs = mat_to_string(R, r0.mor.mat);
            }
        }
        rep.add(rec);
    }

    return rep;
}

}  // namespace xprod
