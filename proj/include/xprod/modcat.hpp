// The category FGF(R) of finitely generated free left R-modules, its
// duals, and the weak G-action by restriction along c_g.
//
// Coordinate conventions (used everywhere downstream):
//
//  * An object is (rank m, automorphism sigma): the module R^m with the
//    twisted action r . v = sigma(r) v. Plain modules have sigma = id;
//    res_{c_g} X twists by sigma_X . c_g.
//  * A morphism is stored as an m x n matrix whose i-th ROW is the image
//    of the i-th source basis vector. On coordinates, f(v) = sigma(v) A
//    (row vector times matrix) with sigma = sigma_tgt . sigma_src^-1
//    applied entrywise. Every matrix is a morphism, so hom(X,Y) has
//    exactly |R|^(mn) elements. Composition: mat(f2 . f1) =
//    sigma2(A1) A2 with sigma2 = sigma_Z . sigma_Y^-1.
//  * Duals use the fixed identification  iota: X* -> R^m,
//    iota(f) = (bar(f(e_i)))_i, under which every dual object is plain
//    (rank m, id). The left action on X* is (r f)(x) = f(x) bar(r).
//
// Under iota the involution data becomes:
//    dual of (phi: X -> Y, matrix A)  =  bar(sigma_Y^-1(A))^T
//    E(X)   : X -> X**                   identity matrix
//    t_g(X) : res_{c_g}(X*) -> (res_{c_g} X)*   bar(u_g) I,
//             u_g = (w(g) tau(g^-1,g))^-1
//    L_{g,h}(X): res_{c_{gh}} X -> res_{c_h} res_{c_g} X
//             sigma_X(tau(g,h)) I
// Inverses of L and t built from the twist's stored inverse tables, so a
// mutated table entry surfaces as a failed invertibility check.
#pragma once

#include <functional>

#include "xprod/report.hpp"
#include "xprod/rng.hpp"
#include "xprod/twist.hpp"

namespace xprod {

// --------------------------------------------------------------------------
// matrices over a finite ring

struct Mat {
    int rows = 0, cols = 0;
    std::vector<int> a;  // row-major ring element indices

    int at(int i, int j) const { return a[i * cols + j]; }
    int& at(int i, int j) { return a[i * cols + j]; }

    static Mat zero(int r, int c) { return {r, c, std::vector<int>(r * c, 0)}; }
    static Mat ident(const FiniteRing& ring, int n);
    static Mat scalar(const FiniteRing& ring, int r, int n);  // r I

    bool operator==(const Mat& o) const = default;
};

Mat mat_mul(const FiniteRing& r, const Mat& x, const Mat& y);
Mat mat_add(const FiniteRing& r, const Mat& x, const Mat& y);
Mat mat_neg(const FiniteRing& r, const Mat& x);
Mat mat_transpose(const Mat& x);
Mat mat_apply(const RingAut& s, const Mat& x);                  // entrywise
Mat mat_apply_table(const std::vector<int>& tab, const Mat& x); // entrywise
Mat mat_scale_left(const FiniteRing& r, int c, const Mat& x);
bool mat_is_identity(const FiniteRing& r, const Mat& x);
// Inverse of a monomial matrix (one unit per row and column); this covers
// every inverse the library needs (scaled identities, permutations).
// Throws std::invalid_argument otherwise.
Mat mat_inverse(const FiniteRing& r, const Mat& x);
std::string mat_to_string(const FiniteRing& r, const Mat& x);
Mat mat_random(const FiniteRing& r, int rows, int cols, Rng& rng);

// --------------------------------------------------------------------------
// the general calculus: objects carry an explicit action twist

struct GenObj {
    int rank = 0;
    RingAut sigma;

    bool operator==(const GenObj& o) const = default;
};

struct GenMor {
    GenObj src, tgt;
    Mat mat;

    bool operator==(const GenMor& o) const = default;
};

GenObj gen_plain(const FiniteRing& r, int rank);
GenObj gen_res_obj(const GenObj& x, const RingAut& c);  // twist by sigma . c

GenMor gen_id(const GenObj& x, const FiniteRing& r);
GenMor gen_compose(const FiniteRing& r, const GenMor& f2, const GenMor& f1);
GenMor gen_add(const FiniteRing& r, const GenMor& f, const GenMor& g);
GenMor gen_res(const GenMor& f, const RingAut& c);  // res_c on morphisms
GenMor gen_inv(const FiniteRing& r, const GenMor& f);

// involution-related components (under the iota identification)
GenObj gen_dual_obj(const FiniteRing& r, const GenObj& x);  // always plain
GenMor gen_dual(const FiniteRing& r, const std::vector<int>& bar, const GenMor& f);
GenMor gen_e(const FiniteRing& r, const GenObj& x);  // E(X): X -> X**

// twist-specific components
GenMor gen_l(const TwistData& t, int g, int h, const GenObj& x);
GenMor gen_l_inv(const TwistData& t, int g, int h, const GenObj& x);  // stored tau inverse
GenMor gen_t(const TwistData& t, int g, int rank);
GenMor gen_t_inv(const TwistData& t, int g, int rank);  // stored w/tau inverses

// --------------------------------------------------------------------------
// the S-category interface: objects labeled by group elements

struct FreeObject {
    int rank = 0;
    int g = 0;  // group label; underlying module is res_{c_g} R^rank

    bool operator==(const FreeObject& o) const = default;
    bool operator<(const FreeObject& o) const {
        return rank != o.rank ? rank < o.rank : g < o.g;
    }
};

struct TwistedMorphism {
    FreeObject src, tgt;
    Mat mat;

    bool operator==(const TwistedMorphism& o) const = default;
};

GenObj underlying(const TwistData& t, const FreeObject& x);
GenMor to_gen(const TwistData& t, const TwistedMorphism& f);
TwistedMorphism from_gen(const GenMor& f, const FreeObject& src, const FreeObject& tgt);

TwistedMorphism tm_id(const TwistData& t, const FreeObject& x);
TwistedMorphism tm_zero(const FreeObject& src, const FreeObject& tgt);
TwistedMorphism compose(const TwistData& t, const TwistedMorphism& f2, const TwistedMorphism& f1);
TwistedMorphism tm_add(const TwistData& t, const TwistedMorphism& f, const TwistedMorphism& g);

// dual of a plain-category morphism (both labels e): bar-transpose
TwistedMorphism dual_morphism(const TwistData& t, const TwistedMorphism& f);
// E(R^m): R^m -> (R^m)**, the identity matrix under iota
TwistedMorphism e_map(const TwistData& t, int rank);
// t_g(R^m): res_{c_g}(R^m)* -> (res_{c_g} R^m)*, labels (rank,g) -> (rank,e)
TwistedMorphism t_g_map(const TwistData& t, int g, int rank);
// L_{g,h} component at R^m; the target twist c_g . c_h is a composite, so
// this lives at the Gen level
GenMor l_tau(const TwistData& t, int g, int h, int rank);

// --------------------------------------------------------------------------
// weak (G,v)-actions on the calculus

// A weak action packaged as callable data so the same pentagon and
// strictification code serves both the restriction action of a twist
// (v = +1) and the duality action of an involution (v(t) = -1).
struct WeakActionData {
    const FiniteGroup* G = nullptr;
    const FiniteRing* R = nullptr;
    SignHom v;
    std::function<GenObj(int, const GenObj&)> act_obj;
    std::function<GenMor(int, const GenMor&)> act_mor;  // contravariant when v(g) = -1
    std::function<GenMor(int, int, const GenObj&)> L;   // R_{gh}(A) -> R_h(R_g(A))
    std::function<GenMor(int, int, const GenObj&)> L_inv;
};

// R_g = res_{c_g}, L from tau; requires trivial v.
WeakActionData weak_action_from_twist(const TwistData& t);

// G = Z/2 acting on plain modules by R_t = dual, L_{t,t} = E, v(t) = -1.
// The scalar family lambda (a unit per rank) deforms E to lambda I; the
// undeformed encoding uses lambda = 1. Deforming by a non-symmetric unit
// breaks the pentagon exactly when it breaks E(I(A)) = I(E(A))^-1, which
// is what the correspondence tests exercise.
WeakActionData weak_action_z2_dual(const FiniteGroup& z2, const FiniteRing& r,
                                   const std::vector<int>& bar, int lambda);

// Pentagon, unit and naturality checks for a weak action:
//   R_e = id,  L_{g,e} = L_{e,g} = id,
//   R_k(L_{g,h}(A))^{v(k)} . L_{gh,k}(A) = L_{h,k}(R_g(A)) . L_{g,hk}(A)
//   L natural in A, every L invertible against its stored inverse.
Report verify_weak_action(const WeakActionData& wa, int max_rank, Rng& rng);
Report verify_weak_action(const TwistData& t, int max_rank, Rng& rng);

// The two involution-compatibility squares of the twisted dual:
//  (i)  t_{gh}(P) = L_{tau(g,h)}(P)* . t_h(res_g P) . res_h(t_g(P)) . L_{tau(g,h)}(P*)
//  (ii) t_g(P)* . E(res_g P) = t_g(P*) . res_g(E(P))
// plus naturality of t_g and invertibility of every t and L.
Report verify_involution_compat(const TwistData& t, int max_rank, Rng& rng);

}  // namespace xprod
