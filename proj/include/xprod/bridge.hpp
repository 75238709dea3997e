// The bridge between the categorical side and the crossed product:
// matrices over R*G, the mutually inverse functors alpha and beta
// between the one-object homotopy colimit of the strictified module
// category and free R*G-modules, and induction along a group
// homomorphism with its comparison isomorphisms.
//
// alpha reads a colimit morphism sum_g g.A^(g) between e-labeled free
// objects as the R*G-matrix with entries
//
//   alpha(phi)_ij = sum_g (tau(g^-1,g)^-1 . g^-1) * (A^(g)_ij . e),
//
// row convention as everywhere: rows are images of basis vectors, and
// composition reverses order, mat(f2 o f1) = mat(f1) mat(f2). beta is
// the pairing-induced inverse on objects (M, e); its matrix is computed
// honestly from bar(B_ik) = delta_ik.
#pragma once

#include <memory>
#include <optional>

#include "xprod/crossed.hpp"
#include "xprod/groupoid.hpp"
#include "xprod/hocolim.hpp"

namespace xprod {

struct CrossedMatrix {
    int rows = 0, cols = 0;
    std::vector<CrossedElement> a;  // row-major

    const CrossedElement& at(int i, int j) const { return a[i * cols + j]; }
    CrossedElement& at(int i, int j) { return a[i * cols + j]; }

    static CrossedMatrix zero(int r, int c) { return {r, c, std::vector<CrossedElement>(r * c)}; }
    static CrossedMatrix ident(const TwistData& t, int n);

    bool operator==(const CrossedMatrix& o) const = default;
};

CrossedMatrix cxmat_mul(const TwistData& t, const CrossedMatrix& x, const CrossedMatrix& y);
CrossedMatrix cxmat_add(const TwistData& t, const CrossedMatrix& x, const CrossedMatrix& y);
// entrywise involution plus transpose: the *-structure on matrices
CrossedMatrix cxmat_star(const TwistData& t, const CrossedMatrix& x);
std::string cxmat_to_string(const TwistData& t, const CrossedMatrix& x);

// The one-object colimit hosting alpha's domain. Objects are (0, (A, g)).
Hocolim<SCatFiber> one_object_colimit(const SCatFiber& fib);

// alpha on a morphism between e-labeled plain objects of the one-object
// colimit; throws std::invalid_argument on any other input.
CrossedMatrix alpha_mor(const TwistData& t, const Hocolim<SCatFiber>& h,
                        const Hocolim<SCatFiber>::Mor& m);

// beta's matrix on (M, e) of the given rank, solved from the pairing;
// requires the involution data.
CrossedMatrix beta_matrix(const TwistData& t, int rank);

// (M, g) -> (M, e): the transport isomorphism g.id and its inverse; the
// report records that both composites are identities.
Report check_e_inclusion(const TwistData& t, int max_rank);

// alpha/beta laws: functoriality, well-definedness over the tensor
// relation, bijectivity on rank-1 hom sets, compatibility of the colimit
// involution with the matrix *-structure, beta's identity matrix and
// naturality, and the e-inclusion isos.
Report verify_bridge(const TwistData& t, int max_rank, uint64_t seed);

// ------------------------------------------------------------------------
// induction along phi: K -> G (K the twist's group)

// ind_phi A = the colimit over the transport groupoid of phi^*G with a
// strict right G-action by relabeling. The struct owns every piece the
// colimit points at, so it is pinned in place (no copies, no moves).
struct InducedCategory {
    FiniteGroup G;    // induced up to
    Biset carrier;    // phi^*G as a K-G-biset
    SCatFiber fib;
    std::unique_ptr<Hocolim<SCatFiber>> inner;
    HKFiber right;

    InducedCategory() = default;
    InducedCategory(const InducedCategory&) = delete;
    InducedCategory& operator=(const InducedCategory&) = delete;
};

std::unique_ptr<InducedCategory> induce(const TwistData& t, const std::vector<int>& phi,
                                        const FiniteGroup& g, int max_rank);

// strictness of the right action, unit, functoriality, and commutation
// with the involution (ind.* records)
Report verify_induced(const InducedCategory& ic, uint64_t seed);

// The two comparison isomorphisms on desk-scale instances (throws when
// |G|, |K|, |xi| or |eta| exceeds 4: these checks are exhaustive on
// purpose):
//   omega: int_{G(xi)}((int_{G(eta)} A) o pr)  =  int_{G(eta x xi)} A
//   tau:   int_{G(xi)}(ind_phi A o pr)         =  int_{G(phi^* xi)} A
// omega is checked as an explicit term-key bijection plus a functor of
// categories with involution; tau as the pushforward along the
// multiplication functor W(a, p) = a.p, which is checked to be an
// equivalence.
Report check_induction_isos(const TwistData& t, const std::vector<int>& phi,
                            const FiniteGroup& g, const GSet& xi, const Biset& eta,
                            uint64_t seed);

}  // namespace xprod
