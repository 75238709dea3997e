#include "xprod/modcat.hpp"

#include <algorithm>
#include <stdexcept>

namespace xprod {

// --------------------------------------------------------------------------
// matrices

Mat Mat::ident(const FiniteRing& ring, int n) {
    Mat m = zero(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
    return m;
}

Mat Mat::scalar(const FiniteRing& ring, int r, int n) {
    Mat m = zero(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = r;
    return m;
}

Mat mat_mul(const FiniteRing& r, const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat out = Mat::zero(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) {
            int v = x.at(i, j);
            if (v == r.zero()) continue;
            for (int k = 0; k < y.cols; ++k)
                out.at(i, k) = r.add(out.at(i, k), r.mul(v, y.at(j, k)));
        }
    return out;
}

Mat mat_add(const FiniteRing& r, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_add: shape mismatch");
    Mat out = x;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = r.add(out.a[i], y.a[i]);
    return out;
}

Mat mat_neg(const FiniteRing& r, const Mat& x) {
    Mat out = x;
    for (int& v : out.a) v = r.neg(v);
    return out;
}

Mat mat_transpose(const Mat& x) {
    Mat out = Mat::zero(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
    return out;
}

Mat mat_apply(const RingAut& s, const Mat& x) {
    Mat out = x;
    for (int& v : out.a) v = s.at(v);
    return out;
}

Mat mat_apply_table(const std::vector<int>& tab, const Mat& x) {
    Mat out = x;
    for (int& v : out.a) v = tab[v];
    return out;
}

Mat mat_scale_left(const FiniteRing& r, int c, const Mat& x) {
    Mat out = x;
    for (int& v : out.a) v = r.mul(c, v);
    return out;
}

bool mat_is_identity(const FiniteRing& r, const Mat& x) {
    if (x.rows != x.cols) return false;
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j)
            if (x.at(i, j) != (i == j ? r.one() : r.zero())) return false;
    return true;
}

Mat mat_inverse(const FiniteRing& r, const Mat& x) {
    if (x.rows != x.cols) throw std::invalid_argument("mat_inverse: not square");
    const int n = x.rows;
    std::vector<int> perm(n, -1);
    std::vector<char> col_used(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (x.at(i, j) != r.zero()) {
                if (perm[i] >= 0)
                    throw std::invalid_argument("mat_inverse: matrix is not monomial");
                perm[i] = j;
            }
        if (perm[i] < 0 || col_used[perm[i]] || !r.is_unit(x.at(i, perm[i])))
            throw std::invalid_argument("mat_inverse: matrix is not invertible monomial");
        col_used[perm[i]] = 1;
    }
    Mat out = Mat::zero(n, n);
    for (int i = 0; i < n; ++i) out.at(perm[i], i) = r.inv(x.at(i, perm[i]));
    return out;
}

std::string mat_to_string(const FiniteRing& r, const Mat& x) {
    std::string out = "[";
    for (int i = 0; i < x.rows; ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < x.cols; ++j) {
            if (j) out += ",";
            out += r.element_name(x.at(i, j));
        }
        out += "]";
    }
    return out + "]";
}

Mat mat_random(const FiniteRing& r, int rows, int cols, Rng& rng) {
    Mat out = Mat::zero(rows, cols);
    for (int& v : out.a) v = rng.below(r.size());
    return out;
}

// --------------------------------------------------------------------------
// Gen calculus

GenObj gen_plain(const FiniteRing& r, int rank) { return {rank, RingAut::identity(r.size())}; }

GenObj gen_res_obj(const GenObj& x, const RingAut& c) { return {x.rank, compose_aut(x.sigma, c)}; }

GenMor gen_id(const GenObj& x, const FiniteRing& r) { return {x, x, Mat::ident(r, x.rank)}; }

GenMor gen_compose(const FiniteRing& r, const GenMor& f2, const GenMor& f1) {
    if (!(f1.tgt == f2.src)) throw std::invalid_argument("gen_compose: endpoint mismatch");
    RingAut s2 = compose_aut(f2.tgt.sigma, inverse_aut(f2.src.sigma));
    return {f1.src, f2.tgt, mat_mul(r, mat_apply(s2, f1.mat), f2.mat)};
}

GenMor gen_add(const FiniteRing& r, const GenMor& f, const GenMor& g) {
    if (!(f.src == g.src) || !(f.tgt == g.tgt))
        throw std::invalid_argument("gen_add: endpoint mismatch");
    return {f.src, f.tgt, mat_add(r, f.mat, g.mat)};
}

GenMor gen_res(const GenMor& f, const RingAut& c) {
    return {gen_res_obj(f.src, c), gen_res_obj(f.tgt, c), f.mat};
}

GenMor gen_inv(const FiniteRing& r, const GenMor& f) {
    RingAut s_inv = compose_aut(f.src.sigma, inverse_aut(f.tgt.sigma));
    return {f.tgt, f.src, mat_apply(s_inv, mat_inverse(r, f.mat))};
}

GenObj gen_dual_obj(const FiniteRing& r, const GenObj& x) { return gen_plain(r, x.rank); }

GenMor gen_dual(const FiniteRing& r, const std::vector<int>& bar, const GenMor& f) {
    Mat m = mat_apply(inverse_aut(f.tgt.sigma), f.mat);
    m = mat_apply_table(bar, m);
    return {gen_dual_obj(r, f.tgt), gen_dual_obj(r, f.src), mat_transpose(m)};
}

GenMor gen_e(const FiniteRing& r, const GenObj& x) {
    return {x, gen_plain(r, x.rank), Mat::ident(r, x.rank)};
}

GenMor gen_l(const TwistData& t, int g, int h, const GenObj& x) {
    GenObj src = gen_res_obj(x, t.cg(t.G.mul(g, h)));
    GenObj tgt = gen_res_obj(x, compose_aut(t.cg(g), t.cg(h)));
    return {src, tgt, Mat::scalar(t.R, x.sigma.at(t.tau(g, h)), x.rank)};
}

GenMor gen_l_inv(const TwistData& t, int g, int h, const GenObj& x) {
    GenObj src = gen_res_obj(x, compose_aut(t.cg(g), t.cg(h)));
    GenObj tgt = gen_res_obj(x, t.cg(t.G.mul(g, h)));
    return {src, tgt, Mat::scalar(t.R, x.sigma.at(t.tau_inv(g, h)), x.rank)};
}

namespace {

// u_g = (w(g) tau(g^-1,g))^-1 computed from the stored inverse tables
int u_from_stored(const TwistData& t, int g) {
    return t.R.mul(t.tau_inv(t.G.inv(g), g), t.w_inv_at(g));
}

}  // namespace

GenMor gen_t(const TwistData& t, int g, int rank) {
    GenObj src = gen_res_obj(gen_plain(t.R, rank), t.cg(g));
    return {src, gen_plain(t.R, rank), Mat::scalar(t.R, t.bar_at(u_from_stored(t, g)), rank)};
}

GenMor gen_t_inv(const TwistData& t, int g, int rank) {
    GenObj tgt = gen_res_obj(gen_plain(t.R, rank), t.cg(g));
    int bu = t.bar_at(u_from_stored(t, g));
    return {gen_plain(t.R, rank), tgt, Mat::scalar(t.R, t.c_at(g, t.R.inv(bu)), rank)};
}

// --------------------------------------------------------------------------
// S-category wrappers

GenObj underlying(const TwistData& t, const FreeObject& x) {
    return gen_res_obj(gen_plain(t.R, x.rank), t.cg(x.g));
}

GenMor to_gen(const TwistData& t, const TwistedMorphism& f) {
    return {underlying(t, f.src), underlying(t, f.tgt), f.mat};
}

TwistedMorphism from_gen(const GenMor& f, const FreeObject& src, const FreeObject& tgt) {
    if (f.src.rank != src.rank || f.tgt.rank != tgt.rank)
        throw std::invalid_argument("from_gen: rank mismatch");
    return {src, tgt, f.mat};
}

TwistedMorphism tm_id(const TwistData& t, const FreeObject& x) {
    return {x, x, Mat::ident(t.R, x.rank)};
}

TwistedMorphism tm_zero(const FreeObject& src, const FreeObject& tgt) {
    return {src, tgt, Mat::zero(src.rank, tgt.rank)};
}

TwistedMorphism compose(const TwistData& t, const TwistedMorphism& f2, const TwistedMorphism& f1) {
    if (!(f1.tgt == f2.src)) throw std::invalid_argument("compose: endpoint mismatch");
    GenMor g = gen_compose(t.R, to_gen(t, f2), to_gen(t, f1));
    return from_gen(g, f1.src, f2.tgt);
}

TwistedMorphism tm_add(const TwistData& t, const TwistedMorphism& f, const TwistedMorphism& g) {
    if (!(f.src == g.src) || !(f.tgt == g.tgt))
        throw std::invalid_argument("tm_add: endpoint mismatch");
    return {f.src, f.tgt, mat_add(t.R, f.mat, g.mat)};
}

TwistedMorphism dual_morphism(const TwistData& t, const TwistedMorphism& f) {
    if (f.src.g != t.G.e || f.tgt.g != t.G.e)
        throw std::invalid_argument("dual_morphism: defined on plain (e-labeled) morphisms only");
    GenMor d = gen_dual(t.R, *t.bar, to_gen(t, f));
    return from_gen(d, {f.tgt.rank, t.G.e}, {f.src.rank, t.G.e});
}

TwistedMorphism e_map(const TwistData& t, int rank) {
    return {{rank, t.G.e}, {rank, t.G.e}, Mat::ident(t.R, rank)};
}

TwistedMorphism t_g_map(const TwistData& t, int g, int rank) {
    GenMor m = gen_t(t, g, rank);
    return from_gen(m, {rank, g}, {rank, t.G.e});
}

GenMor l_tau(const TwistData& t, int g, int h, int rank) {
    return gen_l(t, g, h, gen_plain(t.R, rank));
}

// --------------------------------------------------------------------------
// weak actions

WeakActionData weak_action_from_twist(const TwistData& t) {
    for (int g = 0; g < t.G.m; ++g)
        if (t.v.at(g) != 1)
            throw std::invalid_argument(
                "weak_action_from_twist: restriction actions need trivial v");
    WeakActionData wa;
    wa.G = &t.G;
    wa.R = &t.R;
    wa.v = t.v;
    wa.act_obj = [&t](int g, const GenObj& x) { return gen_res_obj(x, t.cg(g)); };
    wa.act_mor = [&t](int g, const GenMor& f) { return gen_res(f, t.cg(g)); };
    wa.L = [&t](int g, int h, const GenObj& x) { return gen_l(t, g, h, x); };
    wa.L_inv = [&t](int g, int h, const GenObj& x) { return gen_l_inv(t, g, h, x); };
    return wa;
}

WeakActionData weak_action_z2_dual(const FiniteGroup& z2, const FiniteRing& r,
                                   const std::vector<int>& bar, int lambda) {
    if (z2.m != 2) throw std::invalid_argument("weak_action_z2_dual: group must have order 2");
    if (!r.is_unit(lambda)) throw std::invalid_argument("weak_action_z2_dual: lambda must be a unit");
    WeakActionData wa;
    wa.G = &z2;
    wa.R = &r;
    wa.v = SignHom{{1, -1}};
    wa.act_obj = [&r](int g, const GenObj& x) { return g == 0 ? x : gen_dual_obj(r, x); };
    wa.act_mor = [&r, bar](int g, const GenMor& f) { return g == 0 ? f : gen_dual(r, bar, f); };
    auto mk_l = [&r, lambda](int g, int h, const GenObj& x, bool invert) -> GenMor {
        if (g == 0 || h == 0) {
            GenObj y = (g == 0 && h == 0) ? x : gen_dual_obj(r, x);
            // L_{g,e} and L_{e,g} are identities on R_g(A)
            return gen_id(y, r);
        }
        // L_{t,t}(A) = lambda-deformed E(A): A -> A**
        int c = invert ? r.inv(lambda) : lambda;
        GenMor m{x, gen_dual_obj(r, gen_dual_obj(r, x)), Mat::scalar(r, c, x.rank)};
        if (invert) std::swap(m.src, m.tgt);
        return m;
    };
    wa.L = [mk_l](int g, int h, const GenObj& x) { return mk_l(g, h, x, false); };
    wa.L_inv = [mk_l](int g, int h, const GenObj& x) { return mk_l(g, h, x, true); };
    return wa;
}

Report verify_weak_action(const WeakActionData& wa, int max_rank, Rng& rng) {
    Report rep;
    rep.seed = rng.seed();
    const FiniteGroup& G = *wa.G;
    const FiniteRing& R = *wa.R;
    const int m = G.m;
    const int mor_samples = 200;

    std::vector<GenObj> objs;
    for (int k = 0; k <= max_rank; ++k) objs.push_back(gen_plain(R, k));

    auto random_plain_mor = [&](Rng& rr) {
        int a = rr.below(max_rank + 1), b = rr.below(max_rank + 1);
        return GenMor{gen_plain(R, a), gen_plain(R, b), mat_random(R, a, b, rr)};
    };

    // R_e = id on objects and morphisms
    {
        CheckRecord rec{"weak.R_e", "R_e(A) = A and R_e(phi) = phi"};
        for (const auto& a : objs)
            if (!(wa.act_obj(G.e, a) == a)) {
                rec.pass = false;
                rec.witness = {a.rank};
                rec.witness_desc = "(rank)";
                break;
            }
        for (int i = 0; i < mor_samples && rec.pass; ++i) {
            GenMor f = random_plain_mor(rng);
            if (!(wa.act_mor(G.e, f) == f)) {
                rec.pass = false;
                rec.witness = {f.src.rank, f.tgt.rank};
                rec.witness_desc = "(src rank, tgt rank)";
            }
        }
        rep.add(rec);
    }

    // L_{g,e} = L_{e,g} = id
    {
        CheckRecord rec{"weak.L_unit", "L_{g,e}(A) and L_{e,g}(A) are identities"};
        for (int g = 0; g < m && rec.pass; ++g)
            for (const auto& a : objs) {
                GenMor l1 = wa.L(g, G.e, a), l2 = wa.L(G.e, g, a);
                if (!(l1.src == l1.tgt) || !mat_is_identity(R, l1.mat) || !(l2.src == l2.tgt) ||
                    !mat_is_identity(R, l2.mat)) {
                    rec.pass = false;
                    rec.witness = {g, a.rank};
                    rec.witness_desc = "(g, rank)";
                    break;
                }
            }
        rep.add(rec);
    }

    // pentagon: R_k(L_{g,h}(A))^{v(k)} . L_{gh,k}(A) = L_{h,k}(R_g(A)) . L_{g,hk}(A)
    {
        CheckRecord rec{"weak.pentagon",
                        "R_k(L_{g,h}(A))^{v(k)} . L_{gh,k}(A) = L_{h,k}(R_g(A)) . L_{g,hk}(A)"};
        for (int g = 0; g < m && rec.pass; ++g)
            for (int h = 0; h < m && rec.pass; ++h)
                for (int k = 0; k < m && rec.pass; ++k)
                    for (const auto& a : objs) {
                        GenMor outer = wa.act_mor(k, wa.L(g, h, a));
                        if (wa.v.at(k) == -1) outer = gen_inv(R, outer);
                        GenMor lhs = gen_compose(R, outer, wa.L(G.mul(g, h), k, a));
                        GenMor rhs = gen_compose(R, wa.L(h, k, wa.act_obj(g, a)),
                                                 wa.L(g, G.mul(h, k), a));
                        if (!(lhs == rhs)) {
                            rec.pass = false;
                            rec.witness = {g, h, k, a.rank};
                            rec.witness_desc = "(g,h,k,rank)";
                            rec.lhs = mat_to_string(R, lhs.mat);
                            rec.rhs = mat_to_string(R, rhs.mat);
                            break;
                        }
                    }
        rep.add(rec);
    }

    // naturality of L_{g,h} in A
    {
        CheckRecord rec{"weak.L_natural",
                        "L_{g,h}(B) . R_{gh}(phi) = R_h(R_g(phi)) . L_{g,h}(A) (signed)"};
        for (int g = 0; g < m && rec.pass; ++g)
            for (int h = 0; h < m && rec.pass; ++h)
                for (int i = 0; i < mor_samples / 4 + 1; ++i) {
                    GenMor f = random_plain_mor(rng);
                    int gh = G.mul(g, h);
                    bool cov = wa.v.at(gh) == 1;
                    const GenObj &A = f.src, &B = f.tgt;
                    GenMor lhs = gen_compose(R, wa.L(g, h, cov ? B : A), wa.act_mor(gh, f));
                    GenMor rhs = gen_compose(R, wa.act_mor(h, wa.act_mor(g, f)),
                                             wa.L(g, h, cov ? A : B));
                    if (!(lhs == rhs)) {
                        rec.pass = false;
                        rec.witness = {g, h, A.rank, B.rank};
                        rec.witness_desc = "(g,h,src rank,tgt rank)";
                        rec.lhs = mat_to_string(R, lhs.mat);
                        rec.rhs = mat_to_string(R, rhs.mat);
                        break;
                    }
                }
        rep.add(rec);
    }

    // every L invertible against its stored inverse
    {
        CheckRecord rec{"weak.L_iso", "L_{g,h}(A) . L_{g,h}(A)^-1 = id (both orders)"};
        try {
            for (int g = 0; g < m && rec.pass; ++g)
                for (int h = 0; h < m && rec.pass; ++h)
                    for (const auto& a : objs) {
                        GenMor l = wa.L(g, h, a), li = wa.L_inv(g, h, a);
                        GenMor p1 = gen_compose(R, li, l), p2 = gen_compose(R, l, li);
                        if (!mat_is_identity(R, p1.mat) || !mat_is_identity(R, p2.mat)) {
                            rec.pass = false;
                            rec.witness = {g, h, a.rank};
                            rec.witness_desc = "(g,h,rank)";
                            rec.lhs = mat_to_string(R, p1.mat);
                            rec.rhs = "identity";
                            break;
                        }
                    }
        } catch (const std::exception& ex) {
            rec.pass = false;
            rec.lhs = "not evaluated";
            rec.rhs = ex.what();
        }
        rep.add(rec);
    }

    return rep;
}

Report verify_weak_action(const TwistData& t, int max_rank, Rng& rng) {
    WeakActionData wa = weak_action_from_twist(t);
    return verify_weak_action(wa, max_rank, rng);
}

Report verify_involution_compat(const TwistData& t, int max_rank, Rng& rng) {
    if (!t.has_involution())
        throw std::invalid_argument("verify_involution_compat: instance has no bar/w data");
    Report rep;
    rep.seed = rng.seed();
    const FiniteGroup& G = t.G;
    const FiniteRing& R = t.R;
    const int m = G.m;
    const int mor_samples = 100;

    auto guarded = [&](CheckRecord& rec, auto&& body) {
        try {
            body();
        } catch (const std::exception& ex) {
            rec.pass = false;
            rec.lhs = "not evaluated";
            rec.rhs = ex.what();
        }
        rep.add(rec);
    };

    // duality is a contravariant involution on the plain category
    {
        CheckRecord rec{"invcat.dual_contravariant", "(psi . phi)* = phi* . psi*"};
        guarded(rec, [&] {
            for (int i = 0; i < mor_samples && rec.pass; ++i) {
                int a = rng.below(max_rank + 1), b = rng.below(max_rank + 1),
                    c = rng.below(max_rank + 1);
                GenMor phi{gen_plain(R, a), gen_plain(R, b), mat_random(R, a, b, rng)};
                GenMor psi{gen_plain(R, b), gen_plain(R, c), mat_random(R, b, c, rng)};
                GenMor lhs = gen_dual(R, *t.bar, gen_compose(R, psi, phi));
                GenMor rhs = gen_compose(R, gen_dual(R, *t.bar, phi), gen_dual(R, *t.bar, psi));
                if (!(lhs == rhs)) {
                    rec.pass = false;
                    rec.witness = {a, b, c};
                    rec.witness_desc = "(ranks)";
                    rec.lhs = mat_to_string(R, lhs.mat);
                    rec.rhs = mat_to_string(R, rhs.mat);
                }
            }
        });
    }
    {
        CheckRecord rec{"invcat.dual_involutive", "phi** = phi on plain morphisms"};
        guarded(rec, [&] {
            for (int i = 0; i < mor_samples && rec.pass; ++i) {
                int a = rng.below(max_rank + 1), b = rng.below(max_rank + 1);
                GenMor phi{gen_plain(R, a), gen_plain(R, b), mat_random(R, a, b, rng)};
                GenMor dd = gen_dual(R, *t.bar, gen_dual(R, *t.bar, phi));
                if (!(dd == phi)) {
                    rec.pass = false;
                    rec.witness = {a, b};
                    rec.witness_desc = "(ranks)";
                    rec.lhs = mat_to_string(R, dd.mat);
                    rec.rhs = mat_to_string(R, phi.mat);
                }
            }
        });
    }

    // E natural: E(B) . phi = phi** . E(A)
    {
        CheckRecord rec{"invcat.e_natural", "E(B) . phi = phi** . E(A)"};
        guarded(rec, [&] {
            for (int i = 0; i < mor_samples && rec.pass; ++i) {
                int a = rng.below(max_rank + 1), b = rng.below(max_rank + 1);
                GenMor phi{gen_plain(R, a), gen_plain(R, b), mat_random(R, a, b, rng)};
                GenMor lhs = gen_compose(R, gen_e(R, phi.tgt), phi);
                GenMor rhs = gen_compose(R, gen_dual(R, *t.bar, gen_dual(R, *t.bar, phi)),
                                         gen_e(R, phi.src));
                if (!(lhs == rhs)) {
                    rec.pass = false;
                    rec.witness = {a, b};
                    rec.witness_desc = "(ranks)";
                    rec.lhs = mat_to_string(R, lhs.mat);
                    rec.rhs = mat_to_string(R, rhs.mat);
                }
            }
        });
    }

    // naturality of t_g
    {
        CheckRecord rec{"invcat.t_natural", "t_g(P) . res_g(phi*) = res_g(phi)* . t_g(Q)"};
        guarded(rec, [&] {
            for (int g = 0; g < m && rec.pass; ++g)
                for (int i = 0; i < mor_samples / 4 + 1; ++i) {
                    int a = rng.below(max_rank + 1), b = rng.below(max_rank + 1);
                    GenMor phi{gen_plain(R, a), gen_plain(R, b), mat_random(R, a, b, rng)};
                    GenMor lhs = gen_compose(
                        R, gen_t(t, g, a), gen_res(gen_dual(R, *t.bar, phi), t.cg(g)));
                    GenMor rhs = gen_compose(R, gen_dual(R, *t.bar, gen_res(phi, t.cg(g))),
                                             gen_t(t, g, b));
                    if (!(lhs == rhs)) {
                        rec.pass = false;
                        rec.witness = {g, a, b};
                        rec.witness_desc = "(g, src rank, tgt rank)";
                        rec.lhs = mat_to_string(R, lhs.mat);
                        rec.rhs = mat_to_string(R, rhs.mat);
                        break;
                    }
                }
        });
    }

    // coherence square (i):
    // t_{gh}(P) = L_{tau(g,h)}(P)* . t_h(res_g P) . res_h(t_g(P)) . L_{tau(g,h)}(P*)
    {
        CheckRecord rec{"invcat.t_square",
                        "t_{gh}(P) = L(P)* . t_h(res_g P) . res_h(t_g(P)) . L(P*)"};
        guarded(rec, [&] {
            for (int g = 0; g < m && rec.pass; ++g)
                for (int h = 0; h < m && rec.pass; ++h)
                    for (int rank = 0; rank <= max_rank; ++rank) {
                        GenObj p = gen_plain(R, rank);
                        GenMor lhs = gen_t(t, G.mul(g, h), rank);
                        GenMor f1 = gen_l(t, g, h, p);  // component at P*, a plain object
                        GenMor f2 = gen_res(gen_t(t, g, rank), t.cg(h));
                        GenMor f3 = gen_t(t, h, rank);
                        GenMor f4 = gen_dual(R, *t.bar, gen_l(t, g, h, p));
                        GenMor rhs =
                            gen_compose(R, f4, gen_compose(R, f3, gen_compose(R, f2, f1)));
                        if (!(lhs == rhs)) {
                            rec.pass = false;
                            rec.witness = {g, h, rank};
                            rec.witness_desc = "(g,h,rank)";
                            rec.lhs = mat_to_string(R, lhs.mat);
                            rec.rhs = mat_to_string(R, rhs.mat);
                            break;
                        }
                    }
        });
    }

    // coherence square (ii): t_g(P)* . E(res_g P) = t_g(P*) . res_g(E(P))
    {
        CheckRecord rec{"invcat.e_square", "t_g(P)* . E(res_g P) = t_g(P*) . res_g(E(P))"};
        guarded(rec, [&] {
            for (int g = 0; g < m && rec.pass; ++g)
                for (int rank = 0; rank <= max_rank; ++rank) {
                    GenObj p = gen_plain(R, rank);
                    GenObj res_p = gen_res_obj(p, t.cg(g));
                    GenMor lhs =
                        gen_compose(R, gen_dual(R, *t.bar, gen_t(t, g, rank)), gen_e(R, res_p));
                    GenMor rhs = gen_compose(R, gen_t(t, g, rank), gen_res(gen_e(R, p), t.cg(g)));
                    if (!(lhs == rhs)) {
                        rec.pass = false;
                        rec.witness = {g, rank};
                        rec.witness_desc = "(g,rank)";
                        rec.lhs = mat_to_string(R, lhs.mat);
                        rec.rhs = mat_to_string(R, rhs.mat);
                        break;
                    }
                }
        });
    }

    // every t_g invertible
    {
        CheckRecord rec{"invcat.t_iso", "t_g . t_g^-1 = id (both orders)"};
        guarded(rec, [&] {
            for (int g = 0; g < m && rec.pass; ++g)
                for (int rank = 0; rank <= max_rank; ++rank) {
                    GenMor tg = gen_t(t, g, rank), ti = gen_t_inv(t, g, rank);
                    if (!mat_is_identity(R, gen_compose(R, ti, tg).mat) ||
                        !mat_is_identity(R, gen_compose(R, tg, ti).mat)) {
                        rec.pass = false;
                        rec.witness = {g, rank};
                        rec.witness_desc = "(g,rank)";
                        break;
                    }
                }
        });
    }

    // every L invertible against the stored tau inverse
    {
        CheckRecord rec{"invcat.L_iso", "L_{g,h} . L_{g,h}^-1 = id (both orders, stored inverse)"};
        guarded(rec, [&] {
            for (int g = 0; g < m && rec.pass; ++g)
                for (int h = 0; h < m && rec.pass; ++h)
                    for (int rank = 0; rank <= max_rank; ++rank) {
                        GenObj p = gen_plain(R, rank);
                        GenMor l = gen_l(t, g, h, p), li = gen_l_inv(t, g, h, p);
                        if (!mat_is_identity(R, gen_compose(R, li, l).mat) ||
                            !mat_is_identity(R, gen_compose(R, l, li).mat)) {
                            rec.pass = false;
                            rec.witness = {g, h, rank};
                            rec.witness_desc = "(g,h,rank)";
                            break;
                        }
                    }
        });
    }

    return rep;
}

}  // namespace xprod
