#include "xprod/crossed.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace xprod {

namespace {

void put(const FiniteRing& R, std::map<int, int>& terms, int g, int r) {
    auto it = terms.find(g);
    int v = it == terms.end() ? r : R.add(it->second, r);
    if (v == R.zero()) {
        if (it != terms.end()) terms.erase(it);
    } else {
        terms[g] = v;
    }
}

}  // namespace

CrossedElement cx_zero() { return {}; }

CrossedElement cx_basis(const TwistData& t, int r, int g) {
    if (g < 0 || g >= t.G.m || r < 0 || r >= t.R.size())
        throw std::invalid_argument("cx_basis: index out of range");
    CrossedElement a;
    if (r != t.R.zero()) a.terms[g] = r;
    return a;
}

CrossedElement cx_one(const TwistData& t) { return cx_basis(t, t.R.one(), t.G.e); }

CrossedElement cx_add(const TwistData& t, const CrossedElement& a, const CrossedElement& b) {
    CrossedElement out = a;
    for (auto [g, r] : b.terms) put(t.R, out.terms, g, r);
    return out;
}

CrossedElement cx_neg(const TwistData& t, const CrossedElement& a) {
    CrossedElement out;
    for (auto [g, r] : a.terms) out.terms[g] = t.R.neg(r);
    return out;
}

CrossedElement cx_sub(const TwistData& t, const CrossedElement& a, const CrossedElement& b) {
    return cx_add(t, a, cx_neg(t, b));
}

CrossedElement cx_mul(const TwistData& t, const CrossedElement& a, const CrossedElement& b) {
    CrossedElement out;
    for (auto [g1, r1] : a.terms)
        for (auto [g2, r2] : b.terms) {
            int coeff = t.R.mul(t.R.mul(r1, t.c_at(g1, r2)), t.tau(g1, g2));
            put(t.R, out.terms, t.G.mul(g1, g2), coeff);
        }
    return out;
}

CrossedElement cx_scale(const TwistData& t, int r, const CrossedElement& a) {
    CrossedElement out;
    for (auto [g, s] : a.terms) put(t.R, out.terms, g, t.R.mul(r, s));
    return out;
}

CrossedElement cx_involution(const TwistData& t, const CrossedElement& a) {
    CrossedElement out;
    for (auto [g, r] : a.terms) {
        int gi = t.G.inv(g);
        put(t.R, out.terms, gi, t.R.mul(t.w_at(g), t.c_at(gi, t.bar_at(r))));
    }
    return out;
}

std::string cx_to_string(const TwistData& t, const CrossedElement& a) {
    if (a.terms.empty()) return "0";
    std::string out;
    for (auto [g, r] : a.terms) {
        if (!out.empty()) out += " + ";
        out += t.R.element_name(r) + "*" + t.G.name(g);
    }
    return out;
}

Report verify_crossed_product(const TwistData& t, Rng& rng) {
    Report rep;
    rep.seed = rng.seed();
    const int m = t.G.m, n = t.R.size();
    const long long basis = (long long)m * n;
    const bool exhaustive = basis * basis * basis <= 10000000LL;
    const int samples = std::max(10 * m * m * m, 2000);

    // associativity on basis triples
    {
        CheckRecord rec{"cp.assoc", "(x y) z = x (y z) on basis elements r.g"};
        auto check_one = [&](int r1, int g1, int r2, int g2, int r3, int g3) -> bool {
            auto x = cx_basis(t, r1, g1), y = cx_basis(t, r2, g2), z = cx_basis(t, r3, g3);
            auto lhs = cx_mul(t, cx_mul(t, x, y), z);
            auto rhs = cx_mul(t, x, cx_mul(t, y, z));
            if (lhs == rhs) return true;
            rec.pass = false;
            rec.witness = {r1, g1, r2, g2, r3, g3};
            rec.witness_desc = "(r1,g1,r2,g2,r3,g3)";
            rec.lhs = cx_to_string(t, lhs);
            rec.rhs = cx_to_string(t, rhs);
            return false;
        };
        if (exhaustive) {
            for (int r1 = 0; r1 < n && rec.pass; ++r1)
                for (int g1 = 0; g1 < m && rec.pass; ++g1)
                    for (int r2 = 0; r2 < n && rec.pass; ++r2)
                        for (int g2 = 0; g2 < m && rec.pass; ++g2)
                            for (int r3 = 0; r3 < n && rec.pass; ++r3)
                                for (int g3 = 0; g3 < m && rec.pass; ++g3)
                                    check_one(r1, g1, r2, g2, r3, g3);
        } else {
            for (int i = 0; i < samples && rec.pass; ++i)
                check_one(rng.below(n), rng.below(m), rng.below(n), rng.below(m), rng.below(n),
                          rng.below(m));
        }
        rep.add(rec);
    }

    // two-sided unit 1.e
    {
        CheckRecord rec{"cp.unit", "(1.e) x = x (1.e) = x on basis elements"};
        auto one = cx_one(t);
        for (int r = 0; r < n && rec.pass; ++r)
            for (int g = 0; g < m; ++g) {
                auto x = cx_basis(t, r, g);
                if (cx_mul(t, one, x) != x || cx_mul(t, x, one) != x) {
                    rec.pass = false;
                    rec.witness = {r, g};
                    rec.witness_desc = "(r,g)";
                    rec.lhs = cx_to_string(t, cx_mul(t, one, x)) + " / " +
                              cx_to_string(t, cx_mul(t, x, one));
                    rec.rhs = cx_to_string(t, x);
                    break;
                }
            }
        rep.add(rec);
    }

    if (t.has_involution()) {
        {
            CheckRecord rec{"cp.bar_antihom", "bar(x y) = bar(y) bar(x) on basis pairs"};
            for (int r1 = 0; r1 < n && rec.pass; ++r1)
                for (int g1 = 0; g1 < m && rec.pass; ++g1)
                    for (int r2 = 0; r2 < n && rec.pass; ++r2)
                        for (int g2 = 0; g2 < m && rec.pass; ++g2) {
                            auto x = cx_basis(t, r1, g1), y = cx_basis(t, r2, g2);
                            auto lhs = cx_involution(t, cx_mul(t, x, y));
                            auto rhs = cx_mul(t, cx_involution(t, y), cx_involution(t, x));
                            if (lhs != rhs) {
                                rec.pass = false;
                                rec.witness = {r1, g1, r2, g2};
                                rec.witness_desc = "(r1,g1,r2,g2)";
                                rec.lhs = cx_to_string(t, lhs);
                                rec.rhs = cx_to_string(t, rhs);
                            }
                        }
            rep.add(rec);
        }
        {
            CheckRecord rec{"cp.bar_involutive", "bar(bar(x)) = x on basis elements"};
            for (int r = 0; r < n && rec.pass; ++r)
                for (int g = 0; g < m; ++g) {
                    auto x = cx_basis(t, r, g);
                    auto lhs = cx_involution(t, cx_involution(t, x));
                    if (lhs != x) {
                        rec.pass = false;
                        rec.witness = {r, g};
                        rec.witness_desc = "(r,g)";
                        rec.lhs = cx_to_string(t, lhs);
                        rec.rhs = cx_to_string(t, x);
                        break;
                    }
                }
            rep.add(rec);
        }
        {
            CheckRecord rec{"cp.bar_extends", "bar(r.e) = bar_R(r).e"};
            for (int r = 0; r < n; ++r) {
                auto lhs = cx_involution(t, cx_basis(t, r, t.G.e));
                auto rhs = cx_basis(t, t.bar_at(r), t.G.e);
                if (lhs != rhs) {
                    rec.pass = false;
                    rec.witness = {r};
                    rec.witness_desc = "(r)";
                    rec.lhs = cx_to_string(t, lhs);
                    rec.rhs = cx_to_string(t, rhs);
                    break;
                }
            }
            rep.add(rec);
        }
        {
            CheckRecord rec{"cp.bar_basis", "bar(1.g) = w(g).g^-1"};
            for (int g = 0; g < m; ++g) {
                auto lhs = cx_involution(t, cx_basis(t, t.R.one(), g));
                auto rhs = cx_basis(t, t.w_at(g), t.G.inv(g));
                if (lhs != rhs) {
                    rec.pass = false;
                    rec.witness = {g};
                    rec.witness_desc = "(g)";
                    rec.lhs = cx_to_string(t, lhs);
                    rec.rhs = cx_to_string(t, rhs);
                    break;
                }
            }
            rep.add(rec);
        }
    }

    rep.all_pass = true;
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

namespace {

// enumerate every element of R*G (coefficient tuples over G) -- only
// called when |R|^|G| is small
std::vector<CrossedElement> cx_enumerate(const TwistData& t) {
    std::vector<CrossedElement> out;
    const int m = t.G.m, n = t.R.size();
    long long total = 1;
    for (int g = 0; g < m; ++g) total *= n;
    for (long long idx = 0; idx < total; ++idx) {
        CrossedElement a;
        long long v = idx;
        for (int g = 0; g < m; ++g, v /= n) {
            int r = (int)(v % n);
            if (r != t.R.zero()) a.terms[g] = r;
        }
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace

Report verify_extension_iso(const TwistData& t, const ExtensionData& ext,
                            const std::optional<std::vector<int>>& w1, Rng& rng) {
    Report rep;
    rep.seed = rng.seed();
    const FiniteGroup &G = ext.G, &H = ext.H, &Q = ext.Q;
    const FiniteRing& RH = t.R;
    FiniteRing RG = FiniteRing::group_ring(ext.coeff, G);

    // M(sum_q lambda_q . q) = sum_q i(lambda_q) s(q) as an RG element
    auto iso = [&](const CrossedElement& x) {
        std::vector<int> out(G.m, ext.coeff.zero());
        for (auto [q, lam] : x.terms) {
            auto coeffs = RH.gr_decode(lam);
            for (int h = 0; h < H.m; ++h) {
                int pos = G.mul(ext.incl[h], ext.section[q]);
                out[pos] = ext.coeff.add(out[pos], coeffs[h]);
            }
        }
        return RG.gr_encode(out);
    };

    long long total = 1;
    bool small = true;
    for (int q = 0; q < Q.m && small; ++q) {
        total *= RH.size();
        small = total <= 256;
    }

    std::vector<CrossedElement> elems;
    if (small) {
        elems = cx_enumerate(t);
    } else {
        for (int r = 0; r < RH.size(); ++r)
            for (int q = 0; q < Q.m; ++q) elems.push_back(cx_basis(t, r, q));
    }

    {
        CheckRecord rec{"ext.iso_unit", "M(1) = 1"};
        if (iso(cx_one(t)) != RG.one()) {
            rec.pass = false;
            rec.lhs = RG.element_name(iso(cx_one(t)));
            rec.rhs = RG.element_name(RG.one());
        }
        rep.add(rec);
    }
    {
        CheckRecord rec{"ext.iso_mul", "M(x y) = M(x) M(y)"};
        for (size_t i = 0; i < elems.size() && rec.pass; ++i)
            for (size_t j = 0; j < elems.size(); ++j) {
                int lhs = iso(cx_mul(t, elems[i], elems[j]));
                int rhs = RG.mul(iso(elems[i]), iso(elems[j]));
                if (lhs != rhs) {
                    rec.pass = false;
                    rec.witness = {(long long)i, (long long)j};
                    rec.witness_desc = "(element index, element index)";
                    rec.lhs = RG.element_name(lhs);
                    rec.rhs = RG.element_name(rhs);
                    break;
                }
            }
        rep.add(rec);
    }
    {
        CheckRecord rec{"ext.iso_add", "M(x + y) = M(x) + M(y)"};
        for (size_t i = 0; i < elems.size() && rec.pass; ++i)
            for (size_t j = 0; j < elems.size(); ++j) {
                int lhs = iso(cx_add(t, elems[i], elems[j]));
                int rhs = RG.add(iso(elems[i]), iso(elems[j]));
                if (lhs != rhs) {
                    rec.pass = false;
                    rec.witness = {(long long)i, (long long)j};
                    rec.witness_desc = "(element index, element index)";
                    rec.lhs = RG.element_name(lhs);
                    rec.rhs = RG.element_name(rhs);
                    break;
                }
            }
        rep.add(rec);
    }
    {
        CheckRecord rec{"ext.iso_bijective", "M is a bijection onto coeff[G]"};
        if (small && total == (long long)RG.size()) {
            std::vector<char> seen(RG.size(), 0);
            for (size_t i = 0; i < elems.size(); ++i) {
                int v = iso(elems[i]);
                if (seen[v]) {
                    rec.pass = false;
                    rec.witness = {(long long)i};
                    rec.witness_desc = "(element index)";
                    rec.lhs = "M not injective at " + RG.element_name(v);
                    rec.rhs = "";
                    break;
                }
                seen[v] = 1;
            }
        } else if (small) {
            rec.pass = false;
            rec.lhs = "carrier sizes differ: " + std::to_string(total) + " vs " +
                      std::to_string(RG.size());
            rec.rhs = "";
        } else {
            // injectivity spot check on sampled differences of basis elements
            for (int i = 0; i < 500 && rec.pass; ++i) {
                auto& x = elems[rng.below((int)elems.size())];
                auto& y = elems[rng.below((int)elems.size())];
                if (!(x == y) && iso(x) == iso(y)) {
                    rec.pass = false;
                    rec.lhs = cx_to_string(t, x) + " and " + cx_to_string(t, y);
                    rec.rhs = "distinct images";
                }
            }
        }
        rep.add(rec);
    }

    if (w1 && t.has_involution()) {
        // bar on coeff[G]: sum r_g g -> sum bar(r_g) w1(p(g)) g^-1
        std::vector<int> cbar(ext.coeff.size());
        for (int i = 0; i < ext.coeff.size(); ++i) cbar[i] = i;
        if (ext.coeff_bar) cbar = *ext.coeff_bar;
        auto bar_rg = [&](int a) {
            auto coeffs = RG.gr_decode(a);
            std::vector<int> out(G.m, ext.coeff.zero());
            for (int g = 0; g < G.m; ++g) {
                int c = ext.coeff.mul(cbar[coeffs[g]], (*w1)[ext.proj[g]]);
                int pos = G.inv(g);
                out[pos] = ext.coeff.add(out[pos], c);
            }
            return RG.gr_encode(out);
        };
        CheckRecord rec{"ext.iso_involution", "M(bar_w(x)) = bar_w1(M(x))"};
        for (size_t i = 0; i < elems.size(); ++i) {
            int lhs = iso(cx_involution(t, elems[i]));
            int rhs = bar_rg(iso(elems[i]));
            if (lhs != rhs) {
                rec.pass = false;
                rec.witness = {(long long)i};
                rec.witness_desc = "(element index)";
                rec.lhs = RG.element_name(lhs);
                rec.rhs = RG.element_name(rhs);
                break;
            }
        }
        rep.add(rec);
    }

    rep.all_pass = true;
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

}  // namespace xprod
