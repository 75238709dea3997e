#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "xprod/hocolim.hpp"

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

HC one_object_hc(const TwistData& t, const SCatFiber& fib) {
    return HC(transport_groupoid(GSet::one_point(t.G)), &fib,
              [](const Arrow& a) { return a.g; });
}

HC regular_hc(const TwistData& t, const SCatFiber& fib) {
    return HC(transport_groupoid(GSet::regular(t.G)), &fib,
              [](const Arrow& a) { return a.g; });
}

SObj plain_sobj(const TwistData& t, int rank) { return SObj{gen_plain(t.R, rank), t.G.e}; }

}  // namespace

TEST_CASE("single-term composition carries the inverse tau twist") {
    TwistData t = make_z5_twist(1);
    SCatFiber fib = make_scat_fiber(t, 2);
    HC h = one_object_hc(t, fib);

    HC::Obj a = h.obj(0, plain_sobj(t, 1));
    Arrow loop_t{1, 0}, loop_e{0, 0};

    // phi = [r] over the t-arrow, psi = [s] over the t-arrow; the composite
    // sits over the e-arrow with component tau(t,t)^-1 r s = 3 r s mod 5
    for (int r = 0; r < 5; ++r)
        for (int s = 0; s < 5; ++s) {
            HC::Mor m1 = h.single(a, a, loop_t,
                                  scat_mor_from_mat(fib, a.A, fib.act_obj(1, a.A), Mat{1, 1, {r}}));
            HC::Mor m2 = h.single(a, a, loop_t,
                                  scat_mor_from_mat(fib, a.A, fib.act_obj(1, a.A), Mat{1, 1, {s}}));
            HC::Mor got = h.compose(m2, m1);
            int expect = (3 * r * s) % 5;
            HC::Mor want = h.zero(a, a);
            h.add_term(want, loop_e,
                       scat_mor_from_mat(fib, a.A, fib.act_obj(0, a.A), Mat{1, 1, {expect}}));
            CHECK(got == want);
        }

    // e-arrow terms compose like plain matrices
    for (int r = 0; r < 5; ++r)
        for (int s = 0; s < 5; ++s) {
            HC::Mor m1 = h.single(a, a, loop_e,
                                  scat_mor_from_mat(fib, a.A, fib.act_obj(0, a.A), Mat{1, 1, {r}}));
            HC::Mor m2 = h.single(a, a, loop_e,
                                  scat_mor_from_mat(fib, a.A, fib.act_obj(0, a.A), Mat{1, 1, {s}}));
            HC::Mor got = h.compose(m2, m1);
            HC::Mor want = h.zero(a, a);
            h.add_term(want, loop_e,
                       scat_mor_from_mat(fib, a.A, fib.act_obj(0, a.A), Mat{1, 1, {(r * s) % 5}}));
            CHECK(got == want);
        }
}

TEST_CASE("two-object colimit over the regular Z/2-set") {
    TwistData t = make_z5_twist(1);
    SCatFiber fib = make_scat_fiber(t, 2);
    HC h = regular_hc(t, fib);
    REQUIRE(h.gpd.n_objects() == 2);

    HC::Obj a0 = h.obj(0, plain_sobj(t, 1)), a1 = h.obj(1, plain_sobj(t, 1));
    Arrow cross0{1, 0}, cross1{1, 1};
    REQUIRE(h.gpd.tgt(cross0) == 1);

    // crossing t-terms compose to an e-loop with the twisted component
    HC::Mor m1 = h.single(a0, a1, cross0,
                          scat_mor_from_mat(fib, a0.A, fib.act_obj(1, a1.A), Mat{1, 1, {2}}));
    HC::Mor m2 = h.single(a1, a0, cross1,
                          scat_mor_from_mat(fib, a1.A, fib.act_obj(1, a0.A), Mat{1, 1, {1}}));
    HC::Mor got = h.compose(m2, m1);
    HC::Mor want = h.zero(a0, a0);
    h.add_term(want, Arrow{0, 0},
               scat_mor_from_mat(fib, a0.A, fib.act_obj(0, a0.A), Mat{1, 1, {(3 * 2 * 1) % 5}}));
    CHECK(got == want);

    // morphisms between different objects have only crossing terms
    auto homs = h.gpd.hom(0, 1);
    REQUIRE(homs.size() == 1);
    CHECK(homs[0] == cross0);

    // identity laws across the crossing
    CHECK(h.compose(h.id(a1), m1) == m1);
    CHECK(h.compose(m1, h.id(a0)) == m1);

    // transport isomorphisms: f.id and its inverse cancel both ways
    for (const Arrow& f : h.gpd.all_arrows())
        for (int rank = 1; rank <= 2; ++rank) {
            SObj b = plain_sobj(t, rank);
            HC::Mor iso = h.transport_iso(f, b);
            HC::Mor iso_inv = h.transport_iso_inv(f, b);
            CHECK(h.compose(iso, iso_inv) == h.id(iso_inv.src));
            CHECK(h.compose(iso_inv, iso) == h.id(iso.src));
        }
}

TEST_CASE("colimit composition is associative and bilinear (sampled)") {
    for (TwistData t : {make_z5_twist(1), make_f25_twist()}) {
        SCatFiber fib = make_scat_fiber(t, 2);
        HC h = regular_hc(t, fib);
        Rng rng(401);
        for (int trial = 0; trial < 120; ++trial) {
            HC::Obj a = h.sample_obj(rng), b = h.sample_obj(rng), c = h.sample_obj(rng),
                    d = h.sample_obj(rng);
            HC::Mor f = h.sample_mor(a, b, rng), f2 = h.sample_mor(a, b, rng);
            HC::Mor g = h.sample_mor(b, c, rng);
            HC::Mor k = h.sample_mor(c, d, rng);
            CHECK(h.compose(k, h.compose(g, f)) == h.compose(h.compose(k, g), f));
            CHECK(h.compose(g, h.add(f, f2)) == h.add(h.compose(g, f), h.compose(g, f2)));
            CHECK(h.compose(h.id(b), f) == f);
            CHECK(h.compose(f, h.id(a)) == f);
        }
    }
}

TEST_CASE("colimit involution: contravariant, involutive, E natural") {
    for (TwistData t : {make_z5_twist(1), make_z5_twist(4), make_f25_twist()}) {
        SCatFiber fib = make_scat_fiber(t, 2);
        HC h = regular_hc(t, fib);
        Rng rng(402);
        for (int trial = 0; trial < 100; ++trial) {
            HC::Obj a = h.sample_obj(rng), b = h.sample_obj(rng), c = h.sample_obj(rng);
            HC::Mor f = h.sample_mor(a, b, rng);
            HC::Mor g = h.sample_mor(b, c, rng);

            CHECK(h.dual(h.dual(f)) == f);
            CHECK(h.dual(h.compose(g, f)) == h.compose(h.dual(f), h.dual(g)));
            CHECK(h.dual(h.id(a)) == h.id(h.dual_obj(a)));

            // E naturality: E(b) . f = f** . E(a)
            CHECK(h.compose(h.e_mor(b), f) == h.compose(h.dual(h.dual(f)), h.e_mor(a)));

            // triangle: E(a)* . E(a*) = id
            CHECK(h.compose(h.dual(h.e_mor(a)), h.e_mor(h.dual_obj(a))) == h.id(h.dual_obj(a)));
        }
    }
}

TEST_CASE("exhaustive rank-1 involution checks on the one-object colimit") {
    TwistData t = make_z5_twist(4);
    SCatFiber fib = make_scat_fiber(t, 1);
    HC h = one_object_hc(t, fib);
    HC::Obj a = h.obj(0, plain_sobj(t, 1));

    auto homs = enumerate_homs(h, a, a, 1000);
    REQUIRE(homs.size() == 25);  // 5 choices over each of the two loops
    std::set<std::string> printed;
    for (const auto& m : homs) printed.insert(hc_mor_string(h, m));
    CHECK(printed.size() == 25);

    for (const auto& m1 : homs) {
        CHECK(h.dual(h.dual(m1)) == m1);
        for (const auto& m2 : homs)
            CHECK(h.dual(h.compose(m2, m1)) == h.compose(h.dual(m1), h.dual(m2)));
    }

    // the hom set is closed under composition
    std::set<std::string> all;
    for (const auto& m : homs) all.insert(hc_mor_string(h, m));
    for (const auto& m1 : homs)
        for (const auto& m2 : homs) CHECK(all.count(hc_mor_string(h, h.compose(m2, m1))) == 1);

    CHECK(enumerate_homs(h, a, a, 10).empty());
}

TEST_CASE("pushforward along the collapse to one point") {
    TwistData t = make_z5_twist(1);
    SCatFiber fib = make_scat_fiber(t, 2);
    HC src = regular_hc(t, fib);
    HC tgt = one_object_hc(t, fib);

    GroupoidFunctor w = transport_of_gmap(GSet::regular(t.G), GSet::one_point(t.G), {0, 0});

    Rng rng(403);
    for (int trial = 0; trial < 80; ++trial) {
        HC::Obj a = src.sample_obj(rng), b = src.sample_obj(rng), c = src.sample_obj(rng);
        HC::Mor f = src.sample_mor(a, b, rng);
        HC::Mor g = src.sample_mor(b, c, rng);
        CHECK(push_mor(src, tgt, w, src.compose(g, f)) ==
              tgt.compose(push_mor(src, tgt, w, g), push_mor(src, tgt, w, f)));
        CHECK(push_mor(src, tgt, w, src.id(a)) == tgt.id(push_obj(src, tgt, w, a)));
        CHECK(push_mor(src, tgt, w, src.dual(f)) == tgt.dual(push_mor(src, tgt, w, f)));
    }

    // a functor that does not preserve labels is rejected at push time
    GroupoidFunctor collapse = make_groupoid_functor(
        tgt.gpd, tgt.gpd, {0}, [](const Arrow&) { return Arrow{0, 0}; });
    HC::Obj a = tgt.obj(0, plain_sobj(t, 1));
    HC::Mor m = tgt.single(a, a, Arrow{1, 0},
                           scat_mor_from_mat(fib, a.A, fib.act_obj(1, a.A), Mat{1, 1, {1}}));
    CHECK_THROWS_AS(push_mor(tgt, tgt, collapse, m), std::invalid_argument);
}

TEST_CASE("fiberwise maps: identity passes validation, broken family throws") {
    TwistData t = make_z5_twist(1);
    SCatFiber fib = make_scat_fiber(t, 1);
    HC h = regular_hc(t, fib);

    FiberTransformation<SCatFiber> ident{
        [](int, const SObj& x) { return x; },
        [](int, const SMor& f) { return f; }};
    Rng rng(404);
    CHECK_NOTHROW(validate_fiber_transformation(h, ident, 10, rng));

    // map_mor with the identity family is the identity on morphisms
    HC::Obj a = h.sample_obj(rng), b = h.sample_obj(rng);
    HC::Mor f = h.sample_mor(a, b, rng);
    CHECK(map_mor(h, ident, f) == f);

    // doubling components on object 0 only is not a fiber transformation
    FiberTransformation<SCatFiber> broken{
        [](int, const SObj& x) { return x; },
        [&t, &fib](int x, const SMor& f) {
            if (x != 0) return f;
            SMor out = f;
            out.mor.mat = mat_scale_left(t.R, 2, f.mor.mat);
            return out;
        }};
    Rng rng2(405);
    CHECK_THROWS_AS(validate_fiber_transformation(h, broken, 10, rng2), std::invalid_argument);
}

TEST_CASE("direct-sum completion: blocks behave like matrices over the fiber") {
    TwistData t = make_z5_twist(1);
    SCatFiber fib = make_scat_fiber(t, 1);
    Oplus<SCatFiber> op{&fib};

    SObj p = plain_sobj(t, 1);
    auto mk = [&](int r) { return scat_mor_from_mat(fib, p, p, Mat{1, 1, {r}}); };

    Oplus<SCatFiber>::Obj x = op.dsum(op.single(p), op.single(p));
    REQUIRE(x.parts.size() == 2);

    // blocks [[1,2],[3,4]] . [[2,0],[1,3]] = [[4,6],[10,12]] = [[4,1],[0,2]] mod 5
    Oplus<SCatFiber>::Mor f{x, x, {mk(1), mk(2), mk(3), mk(4)}};
    Oplus<SCatFiber>::Mor g{x, x, {mk(2), mk(0), mk(1), mk(3)}};
    Oplus<SCatFiber>::Mor gf = op.compose(g, f);
    CHECK(gf.blocks == std::vector<SMor>{mk(4), mk(1), mk(0), mk(2)});

    CHECK(op.compose(op.id(x), f) == f);
    CHECK(op.compose(f, op.id(x)) == f);

    // direct sums of morphisms are block-diagonal
    Oplus<SCatFiber>::Mor d = op.dsum_mor(op.q(mk(2)), op.q(mk(3)));
    CHECK(d.blocks == std::vector<SMor>{mk(2), mk(0), mk(0), mk(3)});

    // dual transposes the blocks and dualizes each entry
    Oplus<SCatFiber>::Mor fd = op.dual(f);
    CHECK(fd.blocks[1] == fib.dual_mor(f.blocks[2]));
    CHECK(fd.blocks[2] == fib.dual_mor(f.blocks[1]));
    CHECK(op.dual(op.compose(g, f)) == op.compose(op.dual(f), op.dual(g)));

    // e_mor is the blockwise double-dual comparison
    Oplus<SCatFiber>::Mor e = op.e_mor(x);
    CHECK(e.blocks[0] == fib.e_mor(p));
    CHECK(op.fib->is_zero(e.blocks[1]));

    // zero object composes as the empty matrix
    Oplus<SCatFiber>::Obj z = op.zero_obj();
    Oplus<SCatFiber>::Mor zm = op.zero(z, x);
    CHECK(zm.blocks.empty());
}

TEST_CASE("verify_hocolim passes on the shipped instances") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    FiniteRing r2 = FiniteRing::zmod(2);
    TwistData untwisted = TwistData::make(z2, r2, TwistData::trivial_c(z2, r2), {1, 1, 1, 1},
                                          std::vector<int>{0, 1}, {{1, 1}}, std::nullopt);
    for (TwistData t : {untwisted, make_z5_twist(1), make_z5_twist(4), make_f25_twist()}) {
        Report rep = verify_hocolim(t, 1, 406);
        CHECK(rep.all_pass);
        CHECK(rep.checks.size() >= 8);
    }
    Report rep2 = verify_hocolim(make_z5_twist(1), 2, 407);
    CHECK(rep2.all_pass);
}
