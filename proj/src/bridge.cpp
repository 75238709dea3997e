#include "xprod/bridge.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace xprod {

CrossedMatrix CrossedMatrix::ident(const TwistData& t, int n) {
    CrossedMatrix m = zero(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = cx_one(t);
    return m;
}

CrossedMatrix cxmat_mul(const TwistData& t, const CrossedMatrix& x, const CrossedMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("cxmat_mul: shape mismatch");
    CrossedMatrix out = CrossedMatrix::zero(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < y.cols; ++k)
            for (int j = 0; j < x.cols; ++j)
                out.at(i, k) = cx_add(t, out.at(i, k), cx_mul(t, x.at(i, j), y.at(j, k)));
    return out;
}

CrossedMatrix cxmat_add(const TwistData& t, const CrossedMatrix& x, const CrossedMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("cxmat_add: shape mismatch");
    CrossedMatrix out = x;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = cx_add(t, out.a[i], y.a[i]);
    return out;
}

CrossedMatrix cxmat_star(const TwistData& t, const CrossedMatrix& x) {
    CrossedMatrix out = CrossedMatrix::zero(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) out.at(j, i) = cx_involution(t, x.at(i, j));
    return out;
}

std::string cxmat_to_string(const TwistData& t, const CrossedMatrix& x) {
    std::string s = "[";
    for (int i = 0; i < x.rows; ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < x.cols; ++j) {
            if (j) s += ", ";
            s += cx_to_string(t, x.at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

Hocolim<SCatFiber> one_object_colimit(const SCatFiber& fib) {
    return Hocolim<SCatFiber>(transport_groupoid(GSet::one_point(fib.t->G)), &fib,
                              [](const Arrow& f) { return f.g; });
}

static void require_plain_e(const TwistData& t, const Hocolim<SCatFiber>::Obj& o) {
    if (o.x != 0 || o.A.g != t.G.e || !(o.A.A.sigma == RingAut::identity(t.R.size())))
        throw std::invalid_argument("alpha: object is not an e-labeled plain free module");
}

CrossedMatrix alpha_mor(const TwistData& t, const Hocolim<SCatFiber>& h,
                        const Hocolim<SCatFiber>::Mor& m) {
    if (h.gpd.n_objects() != 1) throw std::invalid_argument("alpha: base is not one object");
    require_plain_e(t, m.src);
    require_plain_e(t, m.tgt);
    CrossedMatrix out = CrossedMatrix::zero(m.src.A.A.rank, m.tgt.A.A.rank);
    for (const auto& [f, c] : m.terms) {
        int g = f.g;
        CrossedElement lead = cx_basis(t, t.tau_inv(t.G.inv(g), g), t.G.inv(g));
        for (int i = 0; i < out.rows; ++i)
            for (int j = 0; j < out.cols; ++j)
                out.at(i, j) = cx_add(
                    t, out.at(i, j),
                    cx_mul(t, lead, cx_basis(t, c.mor.mat.at(i, j), t.G.e)));
    }
    return out;
}

CrossedMatrix beta_matrix(const TwistData& t, int rank) {
    if (!t.has_involution())
        throw std::invalid_argument("beta: the twist carries no involution data");
    // pairing convention: <u x f, v x m> = v f(m) bar(u), so the matrix of
    // beta on basis elements solves bar(B_ik) = delta_ik
    CrossedMatrix b = CrossedMatrix::zero(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int k = 0; k < rank; ++k)
            b.at(i, k) = cx_involution(
                t, cx_basis(t, i == k ? t.R.one() : t.R.zero(), t.G.e));
    return b;
}

Report check_e_inclusion(const TwistData& t, int max_rank) {
    Report rep;
    SCatFiber fib = make_scat_fiber(t, max_rank);
    Hocolim<SCatFiber> h = one_object_colimit(fib);
    CheckRecord rec{"bridge.e_inclusion",
                    "(M, g) -> (M, e) given by the term at g with identity component "
                    "is an isomorphism"};
    for (int g = 0; g < t.G.m && rec.pass; ++g)
        for (int rank = 1; rank <= max_rank && rec.pass; ++rank) {
            SObj b{gen_plain(t.R, rank), t.G.e};
            auto i = h.transport_iso(Arrow{g, 0}, b);
            auto j = h.transport_iso_inv(Arrow{g, 0}, b);
            if (!(i.src.A == SObj{gen_plain(t.R, rank), g})) {
                rec.pass = false;
                rec.witness = {g, rank};
                rec.witness_desc = "group element, rank";
                rec.lhs = "source is not (M, g)";
                continue;
            }
            auto c1 = h.compose(j, i);
            auto c2 = h.compose(i, j);
            if (!(c1 == h.id(i.src)) || !(c2 == h.id(j.src))) {
                rec.pass = false;
                rec.witness = {g, rank};
                rec.witness_desc = "group element, rank";
                rec.lhs = hc_mor_string(h, c1);
                rec.rhs = hc_mor_string(h, c2);
            }
        }
    rep.add(rec);
    return rep;
}

Report verify_bridge(const TwistData& t, int max_rank, uint64_t seed) {
    Report rep;
    rep.seed = seed;
    Rng rng(seed);
    const FiniteGroup& G = t.G;
    const FiniteRing& R = t.R;
    SCatFiber fib = make_scat_fiber(t, max_rank);
    Hocolim<SCatFiber> h = one_object_colimit(fib);
    const int samples = 40;

    auto eobj = [&](int rank) { return h.obj(0, SObj{gen_plain(R, rank), G.e}); };
    auto rand_eobj = [&](Rng& r2) { return eobj(1 + r2.below(max_rank)); };

    {
        CheckRecord rec{"bridge.alpha_id", "alpha(id) = I and alpha(0) = 0"};
        for (int rank = 1; rank <= max_rank && rec.pass; ++rank) {
            auto a = eobj(rank);
            bool ok = alpha_mor(t, h, h.id(a)) == CrossedMatrix::ident(t, rank);
            ok = ok && alpha_mor(t, h, h.zero(a, a)) == CrossedMatrix::zero(rank, rank);
            if (!ok) {
                rec.pass = false;
                rec.witness = {rank};
                rec.witness_desc = "rank";
                rec.lhs = cxmat_to_string(t, alpha_mor(t, h, h.id(a)));
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"bridge.alpha_functorial",
                        "alpha(psi . phi) = alpha(phi) alpha(psi) (row convention)"};
        // exhaustive on rank-1 single terms
        auto a = eobj(1);
        for (int g = 0; g < G.m && rec.pass; ++g)
            for (int k = 0; k < G.m && rec.pass; ++k)
                for (int r = 0; r < R.size() && rec.pass; ++r)
                    for (int s = 0; s < R.size() && rec.pass; ++s) {
                        auto phi = h.single(a, a, Arrow{g, 0},
                                            scat_mor_from_mat(fib, a.A, fib.act_obj(g, a.A),
                                                              Mat{1, 1, {r}}));
                        auto psi = h.single(a, a, Arrow{k, 0},
                                            scat_mor_from_mat(fib, a.A, fib.act_obj(k, a.A),
                                                              Mat{1, 1, {s}}));
                        auto l = alpha_mor(t, h, h.compose(psi, phi));
                        auto r0 = cxmat_mul(t, alpha_mor(t, h, phi), alpha_mor(t, h, psi));
                        if (!(l == r0)) {
                            rec.pass = false;
                            rec.witness = {g, k, r, s};
                            rec.witness_desc = "labels g,k and entries r,s";
                            rec.lhs = cxmat_to_string(t, l);
                            rec.rhs = cxmat_to_string(t, r0);
                        }
                    }
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto x = rand_eobj(rng), y = rand_eobj(rng), z = rand_eobj(rng);
            auto phi = h.sample_mor(x, y, rng);
            auto psi = h.sample_mor(y, z, rng);
            auto l = alpha_mor(t, h, h.compose(psi, phi));
            auto r0 = cxmat_mul(t, alpha_mor(t, h, phi), alpha_mor(t, h, psi));
            if (!(l == r0)) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
                rec.lhs = cxmat_to_string(t, l);
                rec.rhs = cxmat_to_string(t, r0);
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"bridge.alpha_additive", "alpha(phi + psi) = alpha(phi) + alpha(psi)"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto x = rand_eobj(rng), y = rand_eobj(rng);
            auto phi = h.sample_mor(x, y, rng);
            auto psi = h.sample_mor(x, y, rng);
            auto l = alpha_mor(t, h, h.add(phi, psi));
            auto r0 = cxmat_add(t, alpha_mor(t, h, phi), alpha_mor(t, h, psi));
            if (!(l == r0)) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
                rec.lhs = cxmat_to_string(t, l);
                rec.rhs = cxmat_to_string(t, r0);
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"bridge.alpha_welldef",
                        "the identification u x (r m) = (u r) x m is consistent: basis "
                        "association and distribution"};
        for (int g = 0; g < G.m && rec.pass; ++g)
            for (int r = 0; r < R.size() && rec.pass; ++r)
                for (int s = 0; s < R.size() && rec.pass; ++s) {
                    auto u = cx_basis(t, R.one(), g);
                    auto x = cx_basis(t, r, G.e);
                    auto y = cx_basis(t, s, G.e);
                    bool ok = cx_mul(t, cx_mul(t, u, x), y) == cx_mul(t, u, cx_mul(t, x, y));
                    ok = ok && cx_mul(t, u, cx_add(t, x, y)) ==
                                   cx_add(t, cx_mul(t, u, x), cx_mul(t, u, y));
                    if (!ok) {
                        rec.pass = false;
                        rec.witness = {g, r, s};
                        rec.witness_desc = "group element, two ring elements";
                    }
                }
        rep.add(rec);
    }
    {
        CheckRecord rec{"bridge.alpha_bijective",
                        "alpha is a bijection hom((R,e),(R,e)) -> R*G at rank 1"};
        auto a = eobj(1);
        auto homs = enumerate_homs(h, a, a, 100000);
        long long expected = 1;
        for (int g = 0; g < G.m; ++g) {
            expected *= R.size();
            if (expected > 100000) break;
        }
        if (!homs.empty() && expected <= 100000) {
            if ((long long)homs.size() != expected) {
                rec.pass = false;
                rec.witness = {(long long)homs.size(), expected};
                rec.witness_desc = "hom count, |R|^|G|";
            }
            std::set<std::string> images;
            for (const auto& f : homs) images.insert(cxmat_to_string(t, alpha_mor(t, h, f)));
            if (rec.pass && (long long)images.size() != expected) {
                rec.pass = false;
                rec.witness = {(long long)images.size(), expected};
                rec.witness_desc = "distinct image count, |R|^|G|";
            }
        } else {
            for (int s = 0; s < samples && rec.pass; ++s) {
                auto f = h.sample_mor(a, a, rng);
                auto g2 = h.sample_mor(a, a, rng);
                if ((alpha_mor(t, h, f) == alpha_mor(t, h, g2)) != (f == g2)) {
                    rec.pass = false;
                    rec.witness = {s};
                    rec.witness_desc = "sample";
                }
            }
        }
        rep.add(rec);
    }

    if (t.has_involution()) {
        {
            CheckRecord rec{"bridge.alpha_dual",
                            "alpha(phi*) = alpha(phi)* : the colimit involution matches "
                            "the matrix *-structure over R*G"};
            auto a = eobj(1);
            for (int g = 0; g < G.m && rec.pass; ++g)
                for (int r = 0; r < R.size() && rec.pass; ++r) {
                    auto phi = h.single(a, a, Arrow{g, 0},
                                        scat_mor_from_mat(fib, a.A, fib.act_obj(g, a.A),
                                                          Mat{1, 1, {r}}));
                    auto l = alpha_mor(t, h, h.dual(phi));
                    auto r0 = cxmat_star(t, alpha_mor(t, h, phi));
                    if (!(l == r0)) {
                        rec.pass = false;
                        rec.witness = {g, r};
                        rec.witness_desc = "label, entry";
                        rec.lhs = cxmat_to_string(t, l);
                        rec.rhs = cxmat_to_string(t, r0);
                    }
                }
            for (int s = 0; s < samples && rec.pass; ++s) {
                auto x = rand_eobj(rng), y = rand_eobj(rng);
                auto phi = h.sample_mor(x, y, rng);
                auto l = alpha_mor(t, h, h.dual(phi));
                auto r0 = cxmat_star(t, alpha_mor(t, h, phi));
                if (!(l == r0)) {
                    rec.pass = false;
                    rec.witness = {s};
                    rec.witness_desc = "sample";
                    rec.lhs = cxmat_to_string(t, l);
                    rec.rhs = cxmat_to_string(t, r0);
                }
            }
            rep.add(rec);
        }
        {
            CheckRecord rec{"bridge.beta_identity",
                            "the pairing matrix of beta solves bar(B) = I, so B = I"};
            for (int rank = 1; rank <= max_rank && rec.pass; ++rank) {
                auto b = beta_matrix(t, rank);
                if (!(b == CrossedMatrix::ident(t, rank))) {
                    rec.pass = false;
                    rec.witness = {rank};
                    rec.witness_desc = "rank";
                    rec.lhs = cxmat_to_string(t, b);
                }
            }
            rep.add(rec);
        }
        {
            CheckRecord rec{"bridge.beta_natural",
                            "alpha(phi*) . beta = beta . alpha(phi)* as matrices"};
            for (int s = 0; s < samples && rec.pass; ++s) {
                auto x = rand_eobj(rng), y = rand_eobj(rng);
                auto phi = h.sample_mor(x, y, rng);
                int m = x.A.A.rank, n = y.A.A.rank;
                auto l = cxmat_mul(t, alpha_mor(t, h, h.dual(phi)), beta_matrix(t, m));
                auto r0 = cxmat_mul(t, beta_matrix(t, n), cxmat_star(t, alpha_mor(t, h, phi)));
                if (!(l == r0)) {
                    rec.pass = false;
                    rec.witness = {s};
                    rec.witness_desc = "sample";
                    rec.lhs = cxmat_to_string(t, l);
                    rec.rhs = cxmat_to_string(t, r0);
                }
            }
            rep.add(rec);
        }
        {
            CheckRecord rec{"bridge.e_diagram",
                            "alpha(E(X)) = I = beta . (beta adjoint)"};
            for (int rank = 1; rank <= max_rank && rec.pass; ++rank) {
                auto a = eobj(rank);
                auto l = alpha_mor(t, h, h.e_mor(a));
                auto b = beta_matrix(t, rank);
                auto r0 = cxmat_mul(t, b, cxmat_star(t, b));
                if (!(l == CrossedMatrix::ident(t, rank)) || !(l == r0)) {
                    rec.pass = false;
                    rec.witness = {rank};
                    rec.witness_desc = "rank";
                    rec.lhs = cxmat_to_string(t, l);
                    rec.rhs = cxmat_to_string(t, r0);
                }
            }
            rep.add(rec);
        }
    }

    rep.merge(check_e_inclusion(t, max_rank));
    return rep;
}

// ------------------------------------------------------------------------
// induction

std::unique_ptr<InducedCategory> induce(const TwistData& t, const std::vector<int>& phi,
                                        const FiniteGroup& g, int max_rank) {
    auto ic = std::make_unique<InducedCategory>();
    ic->G = g;
    ic->carrier = Biset::pullback_group(t.G, ic->G, phi);
    ic->fib = make_scat_fiber(t, max_rank);
    ic->inner = std::make_unique<Hocolim<SCatFiber>>(
        transport_groupoid(ic->carrier.left_gset()), &ic->fib,
        [](const Arrow& f) { return f.g; });
    ic->right = make_hk_fiber(*ic->inner, ic->carrier);
    return ic;
}

Report verify_induced(const InducedCategory& ic, uint64_t seed) {
    Report rep;
    rep.seed = seed;
    Rng rng(seed);
    const Hocolim<SCatFiber>& inner = *ic.inner;
    const HKFiber& hk = ic.right;
    const FiniteGroup& G = ic.G;
    const int samples = 30;

    {
        CheckRecord rec{"ind.R_e", "the unit acts trivially on ind_phi A"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = inner.sample_obj(rng), b = inner.sample_obj(rng);
            auto f = inner.sample_mor(a, b, rng);
            if (!(hk.act_obj(G.e, a) == a) || !(hk.act_mor(G.e, f) == f)) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"ind.strict", "R_b R_a = R_ab on the nose"};
        for (int a1 = 0; a1 < G.m && rec.pass; ++a1)
            for (int a2 = 0; a2 < G.m && rec.pass; ++a2)
                for (int s = 0; s < 4 && rec.pass; ++s) {
                    auto a = inner.sample_obj(rng), b = inner.sample_obj(rng);
                    auto f = inner.sample_mor(a, b, rng);
                    auto l = hk.act_mor(a2, hk.act_mor(a1, f));
                    auto r0 = hk.act_mor(G.mul(a1, a2), f);
                    if (!(l == r0) ||
                        !(hk.act_obj(a2, hk.act_obj(a1, a)) == hk.act_obj(G.mul(a1, a2), a))) {
                        rec.pass = false;
                        rec.witness = {a1, a2, s};
                        rec.witness_desc = "a1, a2, sample";
                        rec.lhs = hc_mor_string(inner, l);
                        rec.rhs = hc_mor_string(inner, r0);
                    }
                }
        rep.add(rec);
    }
    {
        CheckRecord rec{"ind.functor", "each R_a is a functor"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            int a0 = rng.below(G.m);
            auto a = inner.sample_obj(rng), b = inner.sample_obj(rng), c = inner.sample_obj(rng);
            auto f = inner.sample_mor(a, b, rng);
            auto g2 = inner.sample_mor(b, c, rng);
            auto l = hk.act_mor(a0, inner.compose(g2, f));
            auto r0 = inner.compose(hk.act_mor(a0, g2), hk.act_mor(a0, f));
            bool ok = l == r0;
            ok = ok && hk.act_mor(a0, inner.id(a)) == inner.id(hk.act_obj(a0, a));
            if (!ok) {
                rec.pass = false;
                rec.witness = {s, a0};
                rec.witness_desc = "sample, group element";
                rec.lhs = hc_mor_string(inner, l);
                rec.rhs = hc_mor_string(inner, r0);
            }
        }
        rep.add(rec);
    }
    if (ic.fib.t->has_involution()) {
        CheckRecord rec{"ind.dual_commute", "R_a phi* = (R_a phi)*"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            int a0 = rng.below(G.m);
            auto a = inner.sample_obj(rng), b = inner.sample_obj(rng);
            auto f = inner.sample_mor(a, b, rng);
            auto l = hk.act_mor(a0, inner.dual(f));
            auto r0 = inner.dual(hk.act_mor(a0, f));
            if (!(l == r0)) {
                rec.pass = false;
                rec.witness = {s, a0};
                rec.witness_desc = "sample, group element";
                rec.lhs = hc_mor_string(inner, l);
                rec.rhs = hc_mor_string(inner, r0);
            }
        }
        rep.add(rec);
    }
    return rep;
}

namespace {

// the product left (G x K)-set on eta x xi: (g,k).(y,x) = (k y g^-1, g x)
GSet product_set(const FiniteGroup& gk, const FiniteGroup& g, const FiniteGroup& k,
                 const Biset& eta, const GSet& xi) {
    std::vector<std::vector<int>> rows(gk.m, std::vector<int>(eta.n * xi.n));
    for (int gi = 0; gi < g.m; ++gi)
        for (int ki = 0; ki < k.m; ++ki) {
            int idx = FiniteGroup::pair_index(k, gi, ki);
            for (int y = 0; y < eta.n; ++y)
                for (int x = 0; x < xi.n; ++x) {
                    int y2 = eta.right(eta.left(ki, y), g.inv(gi));
                    int x2 = xi.act(gi, x);
                    rows[idx][y * xi.n + x] = y2 * xi.n + x2;
                }
        }
    return GSet::from_table(gk, rows);
}

std::string key_of(const Hocolim<SCatFiber>& h, const Hocolim<SCatFiber>::Mor& m) {
    return hc_mor_string(h, m) + "|" + std::to_string(m.src.x) + ">" + std::to_string(m.tgt.x);
}

}  // namespace

Report check_induction_isos(const TwistData& t, const std::vector<int>& phi,
                            const FiniteGroup& g, const GSet& xi, const Biset& eta,
                            uint64_t seed) {
    const FiniteGroup& k = t.G;
    if (k.m > 4 || g.m > 4 || xi.n > 4 || eta.n > 4)
        throw std::invalid_argument(
            "check_induction_isos: exhaustive comparison needs |G|, |K|, |xi|, |eta| <= 4");
    if (!(xi.G == g)) throw std::invalid_argument("check_induction_isos: xi is not a G-set");
    if (!(eta.K == k) || !(eta.G == g))
        throw std::invalid_argument("check_induction_isos: eta is not a K-G-biset");

    Report rep;
    rep.seed = seed;
    Rng rng(seed);
    SCatFiber fib = make_scat_fiber(t, 1);  // rank 1: the comparisons are exhaustive on keys
    const int samples = 30;

    // ---- omega: the double colimit over eta against the product set
    Hocolim<SCatFiber> inner(transport_groupoid(eta.left_gset()), &fib,
                             [](const Arrow& f) { return f.g; });
    HKFiber hkf = make_hk_fiber(inner, eta);
    Hocolim<HKFiber> outer(transport_groupoid(xi), &hkf, [](const Arrow& f) { return f.g; });

    FiniteGroup gk = FiniteGroup::product(g, k);
    {
        CheckRecord rec{"ind.product_action",
                        "(g,k).(y,x) = (k y g^-1, g x) is a left (G x K)-action"};
        try {
            (void)product_set(gk, g, k, eta, xi);
        } catch (const std::exception& ex) {
            rec.pass = false;
            rec.lhs = ex.what();
        }
        rep.add(rec);
        if (!rec.pass) return rep;
    }
    GSet pset = product_set(gk, g, k, eta, xi);
    Hocolim<SCatFiber> rhs(transport_groupoid(pset), &fib,
                           [km = k.m](const Arrow& f) { return f.g % km; });

    auto omega_obj = [&](const Hocolim<HKFiber>::Obj& o) {
        return rhs.obj(o.A.x * xi.n + o.x, o.A.A);
    };
    auto omega_mor = [&](const Hocolim<HKFiber>::Mor& m) {
        auto out = rhs.zero(omega_obj(m.src), omega_obj(m.tgt));
        for (const auto& [fo, im] : m.terms)
            for (const auto& [fi, nu] : im.terms)
                rhs.add_term(out, Arrow{FiniteGroup::pair_index(k, fo.g, fi.g),
                                        fi.src * xi.n + fo.src},
                             nu);
        return out;
    };

    {
        CheckRecord rec{"ind.omega_objects", "(x, (y, A)) -> ((y, x), A) is a bijection"};
        std::set<int> hit;
        for (int x = 0; x < xi.n; ++x)
            for (int y = 0; y < eta.n; ++y) hit.insert(y * xi.n + x);
        if ((int)hit.size() != pset.n) {
            rec.pass = false;
            rec.witness = {(long long)hit.size(), pset.n};
            rec.witness_desc = "distinct images, points of eta x xi";
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"ind.omega_homs",
                        "term arrows correspond: {(g,k) : gx1 = x2, k y1 = y2 g} matches "
                        "hom((y1,x1),(y2,x2)) in the product transport groupoid"};
        for (int x1 = 0; x1 < xi.n && rec.pass; ++x1)
            for (int x2 = 0; x2 < xi.n && rec.pass; ++x2)
                for (int y1 = 0; y1 < eta.n && rec.pass; ++y1)
                    for (int y2 = 0; y2 < eta.n && rec.pass; ++y2) {
                        std::set<std::pair<int, int>> lhs_keys, rhs_keys;
                        for (int gi = 0; gi < g.m; ++gi) {
                            if (xi.act(gi, x1) != x2) continue;
                            for (int ki = 0; ki < k.m; ++ki)
                                if (eta.left(ki, y1) == eta.right(y2, gi))
                                    lhs_keys.insert({gi, ki});
                        }
                        for (const Arrow& f :
                             rhs.gpd.hom(y1 * xi.n + x1, y2 * xi.n + x2)) {
                            auto [gi, ki] = FiniteGroup::pair_split(k, f.g);
                            rhs_keys.insert({gi, ki});
                        }
                        if (lhs_keys != rhs_keys) {
                            rec.pass = false;
                            rec.witness = {x1, x2, y1, y2};
                            rec.witness_desc = "x1, x2, y1, y2";
                            rec.lhs = std::to_string(lhs_keys.size()) + " keys";
                            rec.rhs = std::to_string(rhs_keys.size()) + " keys";
                        }
                    }
        rep.add(rec);
    }
    {
        CheckRecord rec{"ind.omega_functor", "omega preserves identities and composition"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = outer.sample_obj(rng), b = outer.sample_obj(rng), c = outer.sample_obj(rng);
            auto f = outer.sample_mor(a, b, rng);
            auto g2 = outer.sample_mor(b, c, rng);
            bool ok = omega_mor(outer.id(a)) == rhs.id(omega_obj(a));
            auto l = omega_mor(outer.compose(g2, f));
            auto r0 = rhs.compose(omega_mor(g2), omega_mor(f));
            ok = ok && l == r0;
            if (!ok) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
                rec.lhs = hc_mor_string(rhs, l);
                rec.rhs = hc_mor_string(rhs, r0);
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"ind.omega_additive_bijective",
                        "omega is additive and injective on sampled morphisms"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = outer.sample_obj(rng), b = outer.sample_obj(rng);
            auto f = outer.sample_mor(a, b, rng);
            auto f2 = outer.sample_mor(a, b, rng);
            bool ok = omega_mor(outer.add(f, f2)) == rhs.add(omega_mor(f), omega_mor(f2));
            ok = ok && (omega_mor(f) == omega_mor(f2)) == (f == f2);
            if (!ok) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
            }
        }
        rep.add(rec);
    }
    if (t.has_involution()) {
        CheckRecord rec{"ind.omega_dual", "omega(phi*) = omega(phi)*"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = outer.sample_obj(rng), b = outer.sample_obj(rng);
            auto f = outer.sample_mor(a, b, rng);
            auto l = omega_mor(outer.dual(f));
            auto r0 = rhs.dual(omega_mor(f));
            if (!(l == r0)) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
                rec.lhs = hc_mor_string(rhs, l);
                rec.rhs = hc_mor_string(rhs, r0);
            }
        }
        rep.add(rec);
    }

    // ---- tau: collapse of the phi^*G x xi colimit onto phi^*xi
    Biset carrier = Biset::pullback_group(k, g, phi);
    GSet pset2 = product_set(gk, g, k, carrier, xi);
    Hocolim<SCatFiber> lhsT(transport_groupoid(pset2), &fib,
                            [km = k.m](const Arrow& f) { return f.g % km; });
    std::vector<std::vector<int>> xik_rows(k.m, std::vector<int>(xi.n));
    for (int ki = 0; ki < k.m; ++ki)
        for (int x = 0; x < xi.n; ++x) xik_rows[ki][x] = xi.act(phi[ki], x);
    GSet xik = GSet::from_table(k, xik_rows);
    Hocolim<SCatFiber> rhsT(transport_groupoid(xik), &fib,
                            [](const Arrow& f) { return f.g; });

    std::vector<int> wobj(pset2.n);
    for (int a = 0; a < g.m; ++a)
        for (int p = 0; p < xi.n; ++p) wobj[a * xi.n + p] = xi.act(a, p);
    GroupoidFunctor w;
    bool w_ok = true;
    {
        CheckRecord rec{"ind.tau_functor", "W(a, p) = a.p with W(g,k) = k is a functor"};
        try {
            w = make_groupoid_functor(
                lhsT.gpd, rhsT.gpd, wobj, [km = k.m, &wobj](const Arrow& f) {
                    return Arrow{f.g % km, wobj[f.src]};
                });
        } catch (const std::exception& ex) {
            rec.pass = false;
            rec.lhs = ex.what();
            w_ok = false;
        }
        rep.add(rec);
    }
    if (!w_ok) return rep;
    {
        CheckRecord rec{"ind.tau_equivalence", "W is full, faithful and essentially surjective"};
        if (!is_groupoid_equivalence(w)) {
            rec.pass = false;
            rec.witness_desc = "hom-set comparison failed";
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"ind.tau_pushforward",
                        "W_* is an additive functor commuting with the involution"};
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = lhsT.sample_obj(rng), b = lhsT.sample_obj(rng), c = lhsT.sample_obj(rng);
            auto f = lhsT.sample_mor(a, b, rng);
            auto g2 = lhsT.sample_mor(b, c, rng);
            bool ok = push_mor(lhsT, rhsT, w, lhsT.id(a)) ==
                      rhsT.id(push_obj(lhsT, rhsT, w, a));
            ok = ok && push_mor(lhsT, rhsT, w, lhsT.compose(g2, f)) ==
                           rhsT.compose(push_mor(lhsT, rhsT, w, g2), push_mor(lhsT, rhsT, w, f));
            if (t.has_involution())
                ok = ok && push_mor(lhsT, rhsT, w, lhsT.dual(f)) ==
                               rhsT.dual(push_mor(lhsT, rhsT, w, f));
            if (!ok) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
            }
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"ind.tau_hom_bijection",
                        "W_* is a bijection on rank-1 hom sets"};
        SObj p1{gen_plain(t.R, 1), k.e};
        for (int src = 0; src < pset2.n && rec.pass; ++src)
            for (int dst = 0; dst < pset2.n && rec.pass; ++dst) {
                auto a = lhsT.obj(src, p1), b = lhsT.obj(dst, p1);
                auto homs = enumerate_homs(lhsT, a, b, 4096);
                if (homs.empty() && !lhsT.gpd.hom(src, dst).empty()) continue;  // too large
                auto ta = rhsT.obj(wobj[src], p1), tb = rhsT.obj(wobj[dst], p1);
                auto thoms = enumerate_homs(rhsT, ta, tb, 4096);
                std::set<std::string> images;
                for (const auto& f : homs)
                    images.insert(key_of(rhsT, push_mor(lhsT, rhsT, w, f)));
                if (images.size() != homs.size() || images.size() != thoms.size()) {
                    rec.pass = false;
                    rec.witness = {src, dst, (long long)images.size(), (long long)homs.size(),
                                   (long long)thoms.size()};
                    rec.witness_desc = "source point, target point, images, source homs, "
                                       "target homs";
                }
            }
        rep.add(rec);
    }
    {
        CheckRecord rec{"ind.natural_xi",
                        "collapsing xi to a point commutes with the tau pushforwards"};
        GSet xipt = GSet::one_point(g);
        GSet pset2p = product_set(gk, g, k, carrier, xipt);
        Hocolim<SCatFiber> lhsP(transport_groupoid(pset2p), &fib,
                                [km = k.m](const Arrow& f) { return f.g % km; });
        GSet xikpt = GSet::one_point(k);
        Hocolim<SCatFiber> rhsP(transport_groupoid(xikpt), &fib,
                                [](const Arrow& f) { return f.g; });
        std::vector<int> umap(pset2.n);
        for (int a = 0; a < g.m; ++a)
            for (int p = 0; p < xi.n; ++p) umap[a * xi.n + p] = a;  // (a, p) -> (a, pt)
        auto u = transport_of_gmap(pset2, pset2p, umap);
        std::vector<int> vmap(xi.n, 0);
        auto v = transport_of_gmap(xik, xikpt, vmap);
        auto wp = make_groupoid_functor(lhsP.gpd, rhsP.gpd, std::vector<int>(pset2p.n, 0),
                                        [km = k.m](const Arrow& f) {
                                            return Arrow{f.g % km, 0};
                                        });
        bool square = true;
        for (const Arrow& f : lhsT.gpd.all_arrows())
            if (!(wp.arrow(u.arrow(f)) == v.arrow(w.arrow(f)))) square = false;
        if (!square) {
            rec.pass = false;
            rec.witness_desc = "functor square on arrows";
        }
        for (int s = 0; s < samples && rec.pass; ++s) {
            auto a = lhsT.sample_obj(rng), b = lhsT.sample_obj(rng);
            auto f = lhsT.sample_mor(a, b, rng);
            auto l = push_mor(lhsP, rhsP, wp, push_mor(lhsT, lhsP, u, f));
            auto r0 = push_mor(rhsT, rhsP, v, push_mor(lhsT, rhsT, w, f));
            if (!(l == r0)) {
                rec.pass = false;
                rec.witness = {s};
                rec.witness_desc = "sample";
                rec.lhs = hc_mor_string(rhsP, l);
                rec.rhs = hc_mor_string(rhsP, r0);
            }
        }
        rep.add(rec);
    }
    return rep;
}

}  // namespace xprod
