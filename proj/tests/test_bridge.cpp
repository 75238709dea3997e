#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "xprod/bridge.hpp"

using namespace xprod;

namespace {

FiniteRing make_f25() { return FiniteRing::poly_quotient(5, {3, 0, 1}); }

TwistData make_z5_twist(int w_t) {
    FiniteGroup g = FiniteGroup::cyclic(2);
    FiniteRing r = FiniteRing::zmod(5);
    std::vector<int> bar = {0, 1, 2, 3, 4};
    return TwistData::make(g, r, TwistData::trivial_c(g, r), {1, 1, 1, 2}, bar, {{1, w_t}},
                           std::nullopt);
}

TwistData make_f25_twist() {
    FiniteGroup g = FiniteGroup::cyclic(2);
    FiniteRing r = make_f25();
    std::vector<int> frob = power_map(r, 5);
    std::vector<std::vector<int>> c = {RingAut::identity(25).img, frob};
    return TwistData::make(g, r, c, {1, 1, 1, 4}, frob, {{1, 1}}, std::nullopt);
}

using HC = Hocolim<SCatFiber>;

// single-term endomorphism r over the g-arrow between rank-1 e-objects
HC::Mor term_mor(const TwistData& t, const SCatFiber& fib, const HC& h, const HC::Obj& a,
                 const HC::Obj& b, int g, const Mat& m) {
    return h.single(a, b, Arrow{g, 0}, scat_mor_from_mat(fib, a.A, fib.act_obj(g, b.A), m));
}

// crossed-matrix product recomputed through the dense convolution oracle
CrossedMatrix cxmat_mul_dense(const TwistData& t, const CrossedMatrix& x, const CrossedMatrix& y) {
    CrossedMatrix out = CrossedMatrix::zero(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < y.cols; ++j) {
            oracle::Dense acc = oracle::dense_zero(t);
            for (int k = 0; k < x.cols; ++k)
                acc = oracle::dense_add(
                    t, acc,
                    oracle::dense_mul(t, oracle::dense_from_cx(t, x.at(i, k)),
                                      oracle::dense_from_cx(t, y.at(k, j))));
            out.at(i, j) = oracle::cx_from_dense(t, acc);
        }
    return out;
}

CrossedMatrix random_cxmat(const TwistData& t, int rows, int cols, Rng& rng) {
    CrossedMatrix m = CrossedMatrix::zero(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            CrossedElement x;
            for (int g = 0; g < t.G.m; ++g) {
                int r = rng.below(t.R.size());
                if (r != 0) x.terms[g] = r;
            }
            m.at(i, j) = x;
        }
    return m;
}

}  // namespace

TEST_CASE("alpha on the frozen example: [3] over t maps to 4t") {
    TwistData t = make_z5_twist(1);
    SCatFiber fib = make_scat_fiber(t, 2);
    HC h = one_object_colimit(fib);
    HC::Obj a = h.obj(0, SObj{gen_plain(t.R, 1), t.G.e});

    HC::Mor m = term_mor(t, fib, h, a, a, 1, Mat{1, 1, {3}});
    CrossedMatrix am = alpha_mor(t, h, m);
    REQUIRE(am.rows == 1);
    REQUIRE(am.cols == 1);
    // tau(t,t)^-1 = 3, and (3.t)(3.e) = 9.t = 4.t
    CHECK(am.at(0, 0) == cx_basis(t, 4, 1));

    // e-terms map to scalars unchanged
    HC::Mor me = term_mor(t, fib, h, a, a, 0, Mat{1, 1, {3}});
    CHECK(alpha_mor(t, h, me).at(0, 0) == cx_basis(t, 3, 0));

    // identities and zero
    for (int rank = 1; rank <= 3; ++rank) {
        HC::Obj x = h.obj(0, SObj{gen_plain(t.R, rank), t.G.e});
        CHECK(alpha_mor(t, h, h.id(x)) == CrossedMatrix::ident(t, rank));
    }
    CHECK(alpha_mor(t, h, h.zero(a, a)) == CrossedMatrix::zero(1, 1));
}

TEST_CASE("alpha is functorial and additive (exhaustive single terms)") {
    for (TwistData t : {make_z5_twist(1), make_f25_twist()}) {
        SCatFiber fib = make_scat_fiber(t, 2);
        HC h = one_object_colimit(fib);
        HC::Obj a = h.obj(0, SObj{gen_plain(t.R, 1), t.G.e});

        for (int g = 0; g < t.G.m; ++g)
            for (int k = 0; k < t.G.m; ++k)
                for (int r = 0; r < t.R.size(); r += (t.R.size() > 5 ? 3 : 1))
                    for (int s = 0; s < t.R.size(); s += (t.R.size() > 5 ? 3 : 1)) {
                        HC::Mor f = term_mor(t, fib, h, a, a, g, Mat{1, 1, {r}});
                        HC::Mor g2 = term_mor(t, fib, h, a, a, k, Mat{1, 1, {s}});
                        CHECK(alpha_mor(t, h, h.compose(g2, f)) ==
                              cxmat_mul(t, alpha_mor(t, h, f), alpha_mor(t, h, g2)));
                        CHECK(alpha_mor(t, h, h.add(f, g2)) ==
                              cxmat_add(t, alpha_mor(t, h, f), alpha_mor(t, h, g2)));
                    }

        // sampled multi-term, higher rank
        Rng rng(501);
        for (int trial = 0; trial < 80; ++trial) {
            int m = 1 + rng.below(2), n = 1 + rng.below(2), p = 1 + rng.below(2);
            HC::Obj x = h.obj(0, SObj{gen_plain(t.R, m), t.G.e});
            HC::Obj y = h.obj(0, SObj{gen_plain(t.R, n), t.G.e});
            HC::Obj z = h.obj(0, SObj{gen_plain(t.R, p), t.G.e});
            HC::Mor f = h.sample_mor(x, y, rng);
            HC::Mor g2 = h.sample_mor(y, z, rng);
            CHECK(alpha_mor(t, h, h.compose(g2, f)) ==
                  cxmat_mul(t, alpha_mor(t, h, f), alpha_mor(t, h, g2)));
        }
    }
}

TEST_CASE("alpha is a bijection from rank-1 endomorphisms onto R*G") {
    TwistData t = make_z5_twist(1);
    SCatFiber fib = make_scat_fiber(t, 1);
    HC h = one_object_colimit(fib);
    HC::Obj a = h.obj(0, SObj{gen_plain(t.R, 1), t.G.e});

    auto homs = enumerate_homs(h, a, a, 1000);
    REQUIRE(homs.size() == 25);

    std::set<std::string> images;
    for (const auto& m : homs) {
        CrossedMatrix am = alpha_mor(t, h, m);
        images.insert(cx_to_string(t, am.at(0, 0)));
    }
    CHECK(images.size() == 25);  // injective

    // surjective: every crossed element is hit
    std::set<std::string> everything;
    for (const oracle::Dense& d : oracle::dense_all(t))
        everything.insert(cx_to_string(t, oracle::cx_from_dense(t, d)));
    CHECK(images == everything);
}

TEST_CASE("crossed matrices multiply by dense convolution and star is involutive") {
    for (TwistData t : {make_z5_twist(4), make_f25_twist()}) {
        Rng rng(502);
        for (int trial = 0; trial < 60; ++trial) {
            int m = 1 + rng.below(3), n = 1 + rng.below(3), p = 1 + rng.below(3);
            CrossedMatrix x = random_cxmat(t, m, n, rng);
            CrossedMatrix y = random_cxmat(t, n, p, rng);
            CHECK(cxmat_mul(t, x, y) == cxmat_mul_dense(t, x, y));

            // star: entrywise involution + transpose, contravariant
            CrossedMatrix xs = cxmat_star(t, x);
            REQUIRE(xs.rows == n);
            REQUIRE(xs.cols == m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j)
                    CHECK(xs.at(j, i) == cx_involution(t, x.at(i, j)));
            CHECK(cxmat_star(t, xs) == x);
            CHECK(cxmat_star(t, cxmat_mul(t, x, y)) ==
                  cxmat_mul(t, cxmat_star(t, y), cxmat_star(t, x)));
        }
        CHECK_THROWS_AS(cxmat_mul(t, CrossedMatrix::zero(2, 3), CrossedMatrix::zero(2, 3)),
                        std::invalid_argument);
    }
}

TEST_CASE("beta is the identity matrix and intertwines dual with star") {
    TwistData t = make_z5_twist(1);
    for (int rank = 1; rank <= 3; ++rank)
        CHECK(beta_matrix(t, rank) == CrossedMatrix::ident(t, rank));

    SCatFiber fib = make_scat_fiber(t, 1);
    HC h = one_object_colimit(fib);
    HC::Obj a = h.obj(0, SObj{gen_plain(t.R, 1), t.G.e});

    // all 25 rank-1 endomorphisms: alpha(dual m) = star(alpha(m)), which is
    // the naturality square with beta = I
    auto homs = enumerate_homs(h, a, a, 1000);
    REQUIRE(homs.size() == 25);
    for (const auto& m : homs) {
        CrossedMatrix lhs = alpha_mor(t, h, h.dual(m));
        CrossedMatrix rhs = cxmat_star(t, alpha_mor(t, h, m));
        CHECK(lhs == rhs);
        CHECK(cxmat_mul(t, lhs, beta_matrix(t, 1)) == cxmat_mul(t, beta_matrix(t, 1), rhs));
    }

    TwistData plain = TwistData::make(FiniteGroup::cyclic(2), FiniteRing::zmod(5),
                                      TwistData::trivial_c(FiniteGroup::cyclic(2), FiniteRing::zmod(5)),
                                      {1, 1, 1, 2}, std::nullopt, std::nullopt, std::nullopt);
    CHECK_THROWS_AS(beta_matrix(plain, 1), std::invalid_argument);
}

TEST_CASE("alpha rejects labeled or twisted inputs") {
    TwistData t = make_z5_twist(1);
    SCatFiber fib = make_scat_fiber(t, 2);
    HC h = one_object_colimit(fib);

    // t-labeled endpoints are outside alpha's domain
    HC::Obj bad = h.obj(0, SObj{gen_plain(t.R, 1), 1});
    CHECK_THROWS_AS(alpha_mor(t, h, h.id(bad)), std::invalid_argument);
}

TEST_CASE("e-inclusion isomorphisms compose to identities") {
    for (TwistData t : {make_z5_twist(1), make_f25_twist()}) {
        Report rep = check_e_inclusion(t, 2);
        CHECK(rep.all_pass);
        CHECK(rep.has("bridge.e_inclusion"));
    }
}

TEST_CASE("verify_bridge passes on the shipped instances") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    FiniteRing r2 = FiniteRing::zmod(2);
    TwistData untwisted = TwistData::make(z2, r2, TwistData::trivial_c(z2, r2), {1, 1, 1, 1},
                                          std::vector<int>{0, 1}, {{1, 1}}, std::nullopt);
    for (TwistData t : {untwisted, make_z5_twist(1), make_z5_twist(4), make_f25_twist()}) {
        Report rep = verify_bridge(t, 2, 503);
        CHECK(rep.all_pass);
        CHECK(rep.has("bridge.alpha_functorial"));
        CHECK(rep.has("bridge.alpha_bijective"));
        CHECK(rep.has("bridge.beta_natural"));
        CHECK(rep.has("bridge.e_diagram"));
    }
}

TEST_CASE("induction along the inclusion K -> K x Z/2") {
    TwistData t = make_z5_twist(1);
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    FiniteGroup big = FiniteGroup::product(t.G, z2);
    std::vector<int> incl(t.G.m);
    for (int k = 0; k < t.G.m; ++k) incl[(size_t)k] = FiniteGroup::pair_index(z2, k, 0);

    auto ic = induce(t, incl, big, 1);
    REQUIRE(ic != nullptr);
    CHECK(ic->carrier.n == 4);

    Report rep = verify_induced(*ic, 504);
    CHECK(rep.all_pass);
    CHECK(rep.has("ind.strict"));
    CHECK(rep.has("ind.functor"));
    CHECK(rep.has("ind.dual_commute"));
}

TEST_CASE("induction comparison isomorphisms on desk instances") {
    TwistData t = make_z5_twist(1);
    std::vector<int> idphi = {0, 1};

    // regular xi, pullback eta along the identity
    {
        Report rep = check_induction_isos(t, idphi, t.G, GSet::regular(t.G),
                                          Biset::pullback_group(t.G, t.G, idphi), 505);
        CHECK(rep.all_pass);
        CHECK(rep.has("ind.omega_homs"));
        CHECK(rep.has("ind.omega_functor"));
        CHECK(rep.has("ind.tau_equivalence"));
        CHECK(rep.has("ind.tau_hom_bijection"));
        CHECK(rep.has("ind.natural_xi"));
    }

    // a two-point xi with trivial action
    {
        Report rep = check_induction_isos(t, idphi, t.G, GSet::trivial(t.G, 2),
                                          Biset::pullback_group(t.G, t.G, idphi), 506);
        CHECK(rep.all_pass);
    }

    // untwisted Z/2 base
    {
        FiniteGroup z2 = FiniteGroup::cyclic(2);
        FiniteRing r2 = FiniteRing::zmod(2);
        TwistData u = TwistData::make(z2, r2, TwistData::trivial_c(z2, r2), {1, 1, 1, 1},
                                      std::vector<int>{0, 1}, {{1, 1}}, std::nullopt);
        Report rep = check_induction_isos(u, idphi, u.G, GSet::regular(u.G),
                                          Biset::pullback_group(u.G, u.G, idphi), 507);
        CHECK(rep.all_pass);
    }
}

TEST_CASE("induction iso checker enforces its size caps") {
    TwistData t = make_z5_twist(1);
    std::vector<int> idphi = {0, 1};
    CHECK_THROWS_AS(check_induction_isos(t, idphi, t.G, GSet::trivial(t.G, 5),
                                         Biset::pullback_group(t.G, t.G, idphi), 508),
                    std::invalid_argument);
}
