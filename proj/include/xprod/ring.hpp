// Finite unital rings with enumerable carriers. Elements are indices
// 0..n-1. Three backends:
//
//   Zmod   - Z/n, arithmetic computed lazily (2 <= n <= 65536, no tables)
//   Table  - explicit add/mul tables (n <= 64)
//   Poly   - (Z/p)[x] / (f) for monic f, carrier size p^deg <= 64,
//            materialized into tables at construction
//
// Group rings R0[H] are Table-backed with index encoding
// sum_i c_i * |R0|^i over the elements of H in index order.
//
// Units carry stored inverses computed once at construction; is_unit and
// inv are table lookups afterwards. Automorphisms and involutions are
// image tables validated by enumeration.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xprod/group.hpp"

namespace xprod {

enum class RingBackend { Zmod, Table, Poly };

class FiniteRing {
public:
    RingBackend backend() const { return backend_; }
    int size() const { return n_; }
    int zero() const { return 0; }
    int one() const { return one_; }
    const std::string& desc() const { return desc_; }

    int add(int a, int b) const {
        return add_.empty() ? int((a + b) % n_) : add_[a * n_ + b];
    }
    int neg(int a) const { return neg_.empty() ? int((n_ - a) % n_) : neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const {
        return mul_.empty() ? int((std::int64_t)a * b % n_) : mul_[a * n_ + b];
    }
    bool is_unit(int a) const { return inv_[a] >= 0; }
    // Two-sided inverse; throws std::invalid_argument on non-units.
    int inv(int a) const;
    const std::vector<int>& unit_list() const { return units_; }

    bool is_central(int a) const;

    std::string element_name(int a) const;

    // --- constructors ---
    static FiniteRing zmod(int n);                                   // 2 <= n <= 65536
    static FiniteRing poly_quotient(int p, std::vector<int> monic);  // (Z/p)[x]/(f)
    static FiniteRing from_tables(std::vector<int> add, std::vector<int> mul,
                                  std::string desc = "");
    static FiniteRing group_ring(const FiniteRing& coeff, const FiniteGroup& h);

    // Rebuild this ring as an explicit Table backend (requires n <= 64).
    FiniteRing materialize() const;

    // --- group-ring element encoding (only when built by group_ring) ---
    bool is_group_ring() const { return gr_order_ > 0; }
    int gr_coeff_size() const { return gr_coeff_size_; }
    int gr_order() const { return gr_order_; }
    std::vector<int> gr_decode(int a) const;       // coefficients per H element
    int gr_encode(const std::vector<int>& c) const;
    int gr_basis(int coeff, int h) const;          // coeff * h as a ring element

    bool operator==(const FiniteRing& o) const {
        return backend_ == o.backend_ && n_ == o.n_ && one_ == o.one_ && add_ == o.add_ &&
               mul_ == o.mul_;
    }

private:
    RingBackend backend_ = RingBackend::Zmod;
    int n_ = 0;
    int one_ = 1;
    std::string desc_;
    std::vector<int> add_, mul_, neg_;  // empty for Zmod
    std::vector<int> inv_;              // -1 on non-units
    std::vector<int> units_;
    int gr_coeff_size_ = 0, gr_order_ = 0;
    std::vector<std::string> gr_names_;  // names of H elements

    void finish_tables();  // derive one/neg/inv from add_/mul_, validate axioms
};

// A ring automorphism (or, with reversed multiplication, an involution)
// stored as an image table together with its inverse table.
struct RingAut {
    std::vector<int> img, inv;

    int at(int a) const { return img[a]; }
    int at_inv(int a) const { return inv[a]; }
    int size() const { return (int)img.size(); }

    static RingAut identity(int n);
    // Validates bijectivity only; ring-map properties are checked separately.
    static RingAut from_table(std::vector<int> img);

    bool is_identity() const;
    bool operator==(const RingAut& o) const { return img == o.img; }
    bool operator!=(const RingAut& o) const { return img != o.img; }
};

// a after b: x -> a(b(x)).
RingAut compose_aut(const RingAut& a, const RingAut& b);
RingAut inverse_aut(const RingAut& a);

// True iff the image table is a bijective unital ring homomorphism.
// Exhaustive for n <= 256, sampled (seeded internally, >= 1e5 pairs) above.
bool is_automorphism(const FiniteRing& r, const std::vector<int>& img);

// True iff bijective, additive, bar(1) = 1, bar(ab) = bar(b)bar(a), bar^2 = id.
bool is_ring_involution(const FiniteRing& r, const std::vector<int>& img);

// x -> x^k (k >= 1); the Frobenius maps used by the F_25 instances.
std::vector<int> power_map(const FiniteRing& r, int k);

}  // namespace xprod
