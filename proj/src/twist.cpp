#include "xprod/twist.hpp"

#include <algorithm>
#include <stdexcept>

namespace xprod {

namespace {

std::string nm(const FiniteRing& r, int a) { return r.element_name(a); }

}  // namespace

int TwistData::tau_inv(int g, int h) const {
    int v = tau_inv_[g * G.m + h];
    if (v < 0)
        throw std::invalid_argument("tau(" + G.name(g) + "," + G.name(h) + ") = " +
                                    nm(R, tau(g, h)) + " is not a unit");
    return v;
}

int TwistData::bar_at(int r) const {
    if (!bar) throw std::invalid_argument("twist data has no involution table");
    return (*bar)[r];
}

int TwistData::w_at(int g) const {
    if (!w) throw std::invalid_argument("twist data has no w table");
    return (*w)[g];
}

int TwistData::w_inv_at(int g) const {
    if (!w_inv) throw std::invalid_argument("twist data has no w table");
    int v = (*w_inv)[g];
    if (v < 0)
        throw std::invalid_argument("w(" + G.name(g) + ") = " + nm(R, w_at(g)) +
                                    " is not a unit");
    return v;
}

int TwistData::u_at(int g) const { return R.inv(R.mul(w_at(g), tau(G.inv(g), g))); }

TwistData TwistData::make(FiniteGroup g, FiniteRing r, std::vector<std::vector<int>> c_tables,
                          std::vector<int> tau_flat, std::optional<std::vector<int>> bar,
                          std::optional<std::vector<int>> w, std::optional<SignHom> v) {
    TwistData t;
    t.G = std::move(g);
    t.R = std::move(r);
    const int m = t.G.m, n = t.R.size();

    if ((int)c_tables.size() != m) throw std::invalid_argument("twist: need one c table per group element");
    for (auto& tab : c_tables) {
        if ((int)tab.size() != n) throw std::invalid_argument("twist: c table size mismatch");
        t.c.push_back(RingAut::from_table(tab));
    }

    if ((int)tau_flat.size() != m * m) throw std::invalid_argument("twist: tau table must be |G|^2");
    for (int x : tau_flat)
        if (x < 0 || x >= n) throw std::invalid_argument("twist: tau entry out of range");
    t.tau_ = std::move(tau_flat);
    t.tau_inv_.resize(m * m);
    for (int i = 0; i < m * m; ++i)
        t.tau_inv_[i] = t.R.is_unit(t.tau_[i]) ? t.R.inv(t.tau_[i]) : -1;

    if (bar) {
        if ((int)bar->size() != n) throw std::invalid_argument("twist: bar table size mismatch");
        for (int x : *bar)
            if (x < 0 || x >= n) throw std::invalid_argument("twist: bar entry out of range");
        t.bar = std::move(bar);
    }

    if (w) {
        if ((int)w->size() != m) throw std::invalid_argument("twist: w table size mismatch");
        for (int x : *w)
            if (x < 0 || x >= n) throw std::invalid_argument("twist: w entry out of range");
        t.w = std::move(w);
        t.w_inv = std::vector<int>(m);
        for (int i = 0; i < m; ++i)
            (*t.w_inv)[i] = t.R.is_unit((*t.w)[i]) ? t.R.inv((*t.w)[i]) : -1;
    }

    t.v = v ? std::move(*v) : SignHom::trivial(t.G);
    t.v.validate(t.G);
    return t;
}

std::vector<std::vector<int>> TwistData::trivial_c(const FiniteGroup& g, const FiniteRing& r) {
    std::vector<int> id(r.size());
    for (int i = 0; i < r.size(); ++i) id[i] = i;
    return std::vector<std::vector<int>>(g.m, id);
}

// ---------------------------------------------------------------------------
// validators

Report validate_twist(const TwistData& t, Rng& rng) {
    Report rep;
    rep.seed = rng.seed();
    const FiniteGroup& G = t.G;
    const FiniteRing& R = t.R;
    const int m = G.m, n = R.size();
    const bool exhaustive_r = n <= 32;
    const int samples = std::max(10 * m * m * m, 1000);

    // every c_g an automorphism with a consistent stored inverse table
    {
        CheckRecord rec{"twist.c_automorphism",
                        "every c_g is a ring automorphism with consistent stored inverse"};
        for (int g = 0; g < m && rec.pass; ++g) {
            if (!is_automorphism(R, t.c[g].img)) {
                rec.pass = false;
                rec.witness = {g};
                rec.witness_desc = "(g)";
                rec.lhs = "c_" + G.name(g);
                rec.rhs = "a ring automorphism";
                break;
            }
            for (int r = 0; r < n; ++r)
                if (t.c[g].img[t.c[g].inv[r]] != r || t.c[g].inv[t.c[g].img[r]] != r) {
                    rec.pass = false;
                    rec.witness = {g, r};
                    rec.witness_desc = "(g,r)";
                    rec.lhs = "stored inverse of c_" + G.name(g);
                    rec.rhs = "consistent at r = " + nm(R, r);
                    break;
                }
        }
        rep.add(rec);
    }

    // c_e = id
    {
        CheckRecord rec{"twist.c_e", "c_e = id"};
        for (int r = 0; r < n; ++r)
            if (t.c_at(G.e, r) != r) {
                rec.pass = false;
                rec.witness = {r};
                rec.witness_desc = "(r)";
                rec.lhs = "c_e(" + nm(R, r) + ") = " + nm(R, t.c_at(G.e, r));
                rec.rhs = nm(R, r);
                break;
            }
        rep.add(rec);
    }

    // every tau(g,h) a unit: reported before any condition that divides by it
    bool tau_units_ok = true;
    {
        CheckRecord rec{"twist.tau_unit", "every tau(g,h) is a unit of R"};
        for (int g = 0; g < m && rec.pass; ++g)
            for (int h = 0; h < m; ++h)
                if (!R.is_unit(t.tau(g, h))) {
                    rec.pass = false;
                    rec.witness = {g, h};
                    rec.witness_desc = "(g,h)";
                    rec.lhs = "tau(" + G.name(g) + "," + G.name(h) + ") = " + nm(R, t.tau(g, h));
                    rec.rhs = "a unit";
                    break;
                }
        tau_units_ok = rec.pass;
        rep.add(rec);
    }

    // stored inverse of tau agrees with the entry (two-sided)
    {
        CheckRecord rec{"twist.tau_inv_consistent",
                        "tau(g,h) * stored_inv = stored_inv * tau(g,h) = 1"};
        for (int g = 0; g < m && rec.pass; ++g)
            for (int h = 0; h < m; ++h) {
                int ti = t.tau_inv_[g * m + h];
                if (ti < 0) continue;  // covered by twist.tau_unit
                if (R.mul(t.tau(g, h), ti) != R.one() || R.mul(ti, t.tau(g, h)) != R.one()) {
                    rec.pass = false;
                    rec.witness = {g, h};
                    rec.witness_desc = "(g,h)";
                    rec.lhs = "tau(" + G.name(g) + "," + G.name(h) + ") * " + nm(R, ti);
                    rec.rhs = "1";
                    break;
                }
            }
        rep.add(rec);
    }

    // tau(e,g) = 1 and tau(g,e) = 1
    {
        CheckRecord rec{"twist.tau_e_left", "tau(e,g) = 1"};
        for (int g = 0; g < m; ++g)
            if (t.tau(G.e, g) != R.one()) {
                rec.pass = false;
                rec.witness = {g};
                rec.witness_desc = "(g)";
                rec.lhs = "tau(e," + G.name(g) + ") = " + nm(R, t.tau(G.e, g));
                rec.rhs = "1";
                break;
            }
        rep.add(rec);
    }
    {
        CheckRecord rec{"twist.tau_e_right", "tau(g,e) = 1"};
        for (int g = 0; g < m; ++g)
            if (t.tau(g, G.e) != R.one()) {
                rec.pass = false;
                rec.witness = {g};
                rec.witness_desc = "(g)";
                rec.lhs = "tau(" + G.name(g) + ",e) = " + nm(R, t.tau(g, G.e));
                rec.rhs = "1";
                break;
            }
        rep.add(rec);
    }

    // c_{tau(g,h)} . c_{gh} = c_g . c_h  pointwise on R
    {
        CheckRecord rec{"twist.c_compat", "tau(g,h) c_{gh}(r) tau(g,h)^-1 = c_g(c_h(r))"};
        if (!tau_units_ok) {
            rec.pass = false;
            rec.lhs = "not evaluated";
            rec.rhs = "tau must be unit-valued";
        } else {
            auto check_one = [&](int g, int h, int r) -> bool {
                int u = t.tau(g, h), ui = t.tau_inv(g, h);
                int lhs = R.mul(R.mul(u, t.c_at(G.mul(g, h), r)), ui);
                int rhs = t.c_at(g, t.c_at(h, r));
                if (lhs == rhs) return true;
                rec.pass = false;
                rec.witness = {g, h, r};
                rec.witness_desc = "(g,h,r)";
                rec.lhs = nm(R, lhs);
                rec.rhs = nm(R, rhs);
                return false;
            };
            if (exhaustive_r) {
                for (int g = 0; g < m && rec.pass; ++g)
                    for (int h = 0; h < m && rec.pass; ++h)
                        for (int r = 0; r < n && rec.pass; ++r) check_one(g, h, r);
            } else {
                for (int i = 0; i < samples && rec.pass; ++i)
                    check_one(rng.below(m), rng.below(m), rng.below(n));
            }
        }
        rep.add(rec);
    }

    // cocycle: tau(g,h) tau(gh,k) = c_g(tau(h,k)) tau(g,hk)
    {
        CheckRecord rec{"twist.cocycle", "tau(g,h) tau(gh,k) = c_g(tau(h,k)) tau(g,hk)"};
        auto check_one = [&](int g, int h, int k) -> bool {
            int lhs = R.mul(t.tau(g, h), t.tau(G.mul(g, h), k));
            int rhs = R.mul(t.c_at(g, t.tau(h, k)), t.tau(g, G.mul(h, k)));
            if (lhs == rhs) return true;
            rec.pass = false;
            rec.witness = {g, h, k};
            rec.witness_desc = "(g,h,k)";
            rec.lhs = nm(R, lhs);
            rec.rhs = nm(R, rhs);
            return false;
        };
        if (m <= 8) {
            for (int g = 0; g < m && rec.pass; ++g)
                for (int h = 0; h < m && rec.pass; ++h)
                    for (int k = 0; k < m && rec.pass; ++k) check_one(g, h, k);
        } else {
            for (int i = 0; i < samples && rec.pass; ++i)
                check_one(rng.below(m), rng.below(m), rng.below(m));
        }
        rep.add(rec);
    }

    // v is a sign homomorphism
    {
        CheckRecord rec{"twist.v_sign", "v: G -> {+1,-1} is a homomorphism with v(e) = +1"};
        try {
            t.v.validate(G);
        } catch (const std::exception& ex) {
            rec.pass = false;
            rec.lhs = ex.what();
            rec.rhs = "";
        }
        rep.add(rec);
    }

    rep.all_pass = true;
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

Report validate_involution_twist(const TwistData& t, Rng& rng) {
    if (!t.has_involution())
        throw std::invalid_argument("validate_involution_twist: instance has no bar/w data");
    Report rep;
    rep.seed = rng.seed();
    const FiniteGroup& G = t.G;
    const FiniteRing& R = t.R;
    const int m = G.m, n = R.size();
    const bool exhaustive_r = n <= 32;
    const int samples = std::max(10 * m * m * m, 1000);

    // bar is a ring involution
    {
        CheckRecord rec{"inv.bar_involution",
                        "bar is additive, bar(1) = 1, bar(ab) = bar(b)bar(a), bar(bar(a)) = a"};
        if (!is_ring_involution(R, *t.bar)) {
            rec.pass = false;
            rec.lhs = "bar table";
            rec.rhs = "a ring involution";
        }
        rep.add(rec);
    }

    // every w(g) a unit: reported before any condition that divides by it
    bool w_units_ok = true;
    {
        CheckRecord rec{"inv.w_unit", "every w(g) is a unit of R"};
        for (int g = 0; g < m; ++g)
            if (!R.is_unit(t.w_at(g))) {
                rec.pass = false;
                rec.witness = {g};
                rec.witness_desc = "(g)";
                rec.lhs = "w(" + G.name(g) + ") = " + nm(R, t.w_at(g));
                rec.rhs = "a unit";
                break;
            }
        w_units_ok = rec.pass;
        rep.add(rec);
    }

    {
        CheckRecord rec{"inv.w_inv_consistent", "w(g) * stored_inv = stored_inv * w(g) = 1"};
        for (int g = 0; g < m; ++g) {
            int wi = (*t.w_inv)[g];
            if (wi < 0) continue;  // covered by inv.w_unit
            if (R.mul(t.w_at(g), wi) != R.one() || R.mul(wi, t.w_at(g)) != R.one()) {
                rec.pass = false;
                rec.witness = {g};
                rec.witness_desc = "(g)";
                rec.lhs = "w(" + G.name(g) + ") * " + nm(R, wi);
                rec.rhs = "1";
                break;
            }
        }
        rep.add(rec);
    }

    {
        CheckRecord rec{"inv.w_e", "w(e) = 1"};
        if (t.w_at(G.e) != R.one()) {
            rec.pass = false;
            rec.witness = {G.e};
            rec.witness_desc = "(e)";
            rec.lhs = nm(R, t.w_at(G.e));
            rec.rhs = "1";
        }
        rep.add(rec);
    }

    auto guarded = [&](CheckRecord& rec, auto&& body) {
        if (!w_units_ok) {
            rec.pass = false;
            rec.lhs = "not evaluated";
            rec.rhs = "w must be unit-valued";
            return;
        }
        try {
            body();
        } catch (const std::exception& ex) {
            rec.pass = false;
            rec.lhs = "not evaluated";
            rec.rhs = ex.what();
        }
    };

    // w(gh) = w(h) c_{h^-1}(w(g)) tau(h^-1,g^-1) c_{(gh)^-1}(bar(tau(g,h)))^-1
    {
        CheckRecord rec{"inv.w_product",
                        "w(gh) = w(h) c_{h^-1}(w(g)) tau(h^-1,g^-1) c_{(gh)^-1}(bar(tau(g,h)))^-1"};
        guarded(rec, [&] {
            for (int g = 0; g < m && rec.pass; ++g)
                for (int h = 0; h < m; ++h) {
                    int gh = G.mul(g, h);
                    int lhs = t.w_at(gh);
                    int rhs = R.mul(t.w_at(h), t.c_at(G.inv(h), t.w_at(g)));
                    rhs = R.mul(rhs, t.tau(G.inv(h), G.inv(g)));
                    rhs = R.mul(rhs, R.inv(t.c_at(G.inv(gh), t.bar_at(t.tau(g, h)))));
                    if (lhs != rhs) {
                        rec.pass = false;
                        rec.witness = {g, h};
                        rec.witness_desc = "(g,h)";
                        rec.lhs = nm(R, lhs);
                        rec.rhs = nm(R, rhs);
                        break;
                    }
                }
        });
        rep.add(rec);
    }

    // bar(w(g)) = w(g) c_g^-1(tau(g,g^-1) bar(tau(g,g^-1))^-1); c_g^-1 is the
    // inverse automorphism of c_g, not c indexed by g^-1
    {
        CheckRecord rec{"inv.w_bar", "bar(w(g)) = w(g) c_g^-1(tau(g,g^-1) bar(tau(g,g^-1))^-1)"};
        guarded(rec, [&] {
            for (int g = 0; g < m; ++g) {
                int gi = G.inv(g);
                int lhs = t.bar_at(t.w_at(g));
                int inner = R.mul(t.tau(g, gi), R.inv(t.bar_at(t.tau(g, gi))));
                int rhs = R.mul(t.w_at(g), t.c_inv_at(g, inner));
                if (lhs != rhs) {
                    rec.pass = false;
                    rec.witness = {g};
                    rec.witness_desc = "(g)";
                    rec.lhs = nm(R, lhs);
                    rec.rhs = nm(R, rhs);
                    break;
                }
            }
        });
        rep.add(rec);
    }

    // bar(c_g(r)) = c_g((w(g) tau(g^-1,g))^-1 bar(r) (w(g) tau(g^-1,g)))
    {
        CheckRecord rec{"inv.bar_c",
                        "bar(c_g(r)) = c_g((w(g) tau(g^-1,g))^-1 bar(r) (w(g) tau(g^-1,g)))"};
        guarded(rec, [&] {
            auto check_one = [&](int g, int r) -> bool {
                int s = R.mul(t.w_at(g), t.tau(G.inv(g), g));
                int lhs = t.bar_at(t.c_at(g, r));
                int rhs = t.c_at(g, R.mul(R.mul(R.inv(s), t.bar_at(r)), s));
                if (lhs == rhs) return true;
                rec.pass = false;
                rec.witness = {g, r};
                rec.witness_desc = "(g,r)";
                rec.lhs = nm(R, lhs);
                rec.rhs = nm(R, rhs);
                return false;
            };
            if (exhaustive_r) {
                for (int g = 0; g < m && rec.pass; ++g)
                    for (int r = 0; r < n && rec.pass; ++r) check_one(g, r);
            } else {
                for (int i = 0; i < samples && rec.pass; ++i) check_one(rng.below(m), rng.below(n));
            }
        });
        rep.add(rec);
    }

    // derived: w(g)^-1 = c_{g^-1}(w(g^-1)) tau(g^-1,g) bar(tau(g^-1,g))^-1,
    // verified as a two-sided product against w(g)
    {
        CheckRecord rec{"inv.w_inverse",
                        "w(g) * [c_{g^-1}(w(g^-1)) tau(g^-1,g) bar(tau(g^-1,g))^-1] = 1 (both sides)"};
        guarded(rec, [&] {
            for (int g = 0; g < m; ++g) {
                int gi = G.inv(g);
                int rhs = R.mul(R.mul(t.c_at(gi, t.w_at(gi)), t.tau(gi, g)),
                                R.inv(t.bar_at(t.tau(gi, g))));
                if (R.mul(t.w_at(g), rhs) != R.one() || R.mul(rhs, t.w_at(g)) != R.one()) {
                    rec.pass = false;
                    rec.witness = {g};
                    rec.witness_desc = "(g)";
                    rec.lhs = nm(R, R.mul(t.w_at(g), rhs));
                    rec.rhs = "1";
                    break;
                }
            }
        });
        rep.add(rec);
    }

    rep.all_pass = true;
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

// ---------------------------------------------------------------------------
// extensions

TwistData twist_from_extension(const ExtensionData& ext) {
    const FiniteGroup &H = ext.H, &G = ext.G, &Q = ext.Q;

    if (!is_group_hom(H, G, ext.incl))
        throw std::invalid_argument("extension: incl is not a homomorphism");
    {
        std::vector<char> seen(G.m, 0);
        for (int h = 0; h < H.m; ++h) {
            if (seen[ext.incl[h]]) throw std::invalid_argument("extension: incl is not injective");
            seen[ext.incl[h]] = 1;
        }
    }
    if (!is_group_hom(G, Q, ext.proj))
        throw std::invalid_argument("extension: proj is not a homomorphism");
    {
        std::vector<char> hit(Q.m, 0);
        for (int g = 0; g < G.m; ++g) hit[ext.proj[g]] = 1;
        for (int q = 0; q < Q.m; ++q)
            if (!hit[q]) throw std::invalid_argument("extension: proj is not surjective");
    }
    {
        std::vector<char> in_image(G.m, 0);
        for (int h = 0; h < H.m; ++h) in_image[ext.incl[h]] = 1;
        for (int g = 0; g < G.m; ++g)
            if ((ext.proj[g] == Q.e) != (bool)in_image[g])
                throw std::invalid_argument(
                    "extension: kernel mismatch (ker proj != im incl at " + G.name(g) + ")");
    }
    if ((int)ext.section.size() != Q.m)
        throw std::invalid_argument("extension: section table size mismatch");
    for (int q = 0; q < Q.m; ++q) {
        int s = ext.section[q];
        if (s < 0 || s >= G.m || ext.proj[s] != q)
            throw std::invalid_argument("extension: s is not a section (p(s(q)) != q at " +
                                        Q.name(q) + ")");
    }
    if (ext.section[Q.e] != G.e)
        throw std::invalid_argument("extension: s is not a section (s(e) != e)");

    FiniteRing RH = FiniteRing::group_ring(ext.coeff, H);

    std::vector<int> incl_inv(G.m, -1);
    for (int h = 0; h < H.m; ++h) incl_inv[ext.incl[h]] = h;
    auto pull_back = [&](int g) {
        int h = incl_inv[g];
        if (h < 0)
            throw std::runtime_error("extension: internal, element " + G.name(g) +
                                     " expected in im incl");
        return h;
    };

    // c_q = conjugation by s(q): permutes the H-basis, fixes coefficients
    std::vector<std::vector<int>> c_tables;
    for (int q = 0; q < Q.m; ++q) {
        int s = ext.section[q], si = G.inv(s);
        std::vector<int> perm(H.m);
        for (int h = 0; h < H.m; ++h)
            perm[h] = pull_back(G.mul(G.mul(s, ext.incl[h]), si));
        std::vector<int> table(RH.size());
        for (int a = 0; a < RH.size(); ++a) {
            auto ca = RH.gr_decode(a);
            std::vector<int> out(H.m, 0);
            for (int h = 0; h < H.m; ++h) out[perm[h]] = ca[h];
            table[a] = RH.gr_encode(out);
        }
        c_tables.push_back(std::move(table));
    }

    // tau(q,q') = s(q) s(q') s(qq')^-1, a basis element of coeff[H]
    std::vector<int> tau(Q.m * Q.m);
    for (int q1 = 0; q1 < Q.m; ++q1)
        for (int q2 = 0; q2 < Q.m; ++q2) {
            int g = G.mul(G.mul(ext.section[q1], ext.section[q2]),
                          G.inv(ext.section[Q.mul(q1, q2)]));
            tau[q1 * Q.m + q2] = RH.gr_basis(ext.coeff.one(), pull_back(g));
        }

    // standard involution sum r_h h -> sum bar(r_h) h^-1 on coeff[H]
    std::vector<int> cbar;
    if (ext.coeff_bar) {
        cbar = *ext.coeff_bar;
        if (!is_ring_involution(ext.coeff, cbar))
            throw std::invalid_argument("extension: coeff_bar is not a ring involution");
    } else {
        cbar.resize(ext.coeff.size());
        for (int i = 0; i < ext.coeff.size(); ++i) cbar[i] = i;
    }
    std::vector<int> bar_table(RH.size());
    for (int a = 0; a < RH.size(); ++a) {
        auto ca = RH.gr_decode(a);
        std::vector<int> out(H.m);
        for (int h = 0; h < H.m; ++h) out[h] = cbar[ca[H.inv(h)]];
        bar_table[a] = RH.gr_encode(out);
    }

    return TwistData::make(Q, RH, std::move(c_tables), std::move(tau), std::move(bar_table),
                           std::nullopt, std::nullopt);
}

void set_w_from_w1(TwistData& t, const ExtensionData& ext, const std::vector<int>& w1) {
    const FiniteGroup& Q = t.G;
    const FiniteRing& RH = t.R;
    const FiniteRing& coeff = ext.coeff;
    if (!RH.is_group_ring() || RH.gr_coeff_size() != coeff.size() || Q.m != ext.Q.m)
        throw std::invalid_argument("w_from_w1: twist data does not come from this extension");
    if ((int)w1.size() != Q.m) throw std::invalid_argument("w_from_w1: w1 table size mismatch");

    std::vector<int> cbar(coeff.size());
    for (int i = 0; i < coeff.size(); ++i) cbar[i] = i;
    if (ext.coeff_bar) cbar = *ext.coeff_bar;

    for (int q = 0; q < Q.m; ++q) {
        int v = w1[q];
        if (v < 0 || v >= coeff.size() || !coeff.is_unit(v))
            throw std::invalid_argument("w_from_w1: w1(" + Q.name(q) + ") is not a unit");
        if (!coeff.is_central(v))
            throw std::invalid_argument("w_from_w1: w1(" + Q.name(q) + ") is not central");
        if (cbar[v] != v)
            throw std::invalid_argument("w_from_w1: w1(" + Q.name(q) + ") is not bar-symmetric");
    }
    for (int q1 = 0; q1 < Q.m; ++q1)
        for (int q2 = 0; q2 < Q.m; ++q2)
            if (w1[Q.mul(q1, q2)] != coeff.mul(w1[q1], w1[q2]))
                throw std::invalid_argument("w_from_w1: w1 is not a homomorphism");

    std::vector<int> w(Q.m), w_inv(Q.m);
    for (int q = 0; q < Q.m; ++q) {
        int emb = RH.gr_basis(w1[q], ext.H.e);
        w[q] = RH.mul(emb, RH.inv(t.tau(Q.inv(q), q)));
        w_inv[q] = RH.inv(w[q]);
    }
    t.w = std::move(w);
    t.w_inv = std::move(w_inv);
}

}  // namespace xprod
