#include "xprod/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace xprod {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// deterministic sampling for large-carrier automorphism checks
struct Lcg {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 16;
    }
    int below(int n) { return (int)(next() % (std::uint64_t)n); }
};

}  // namespace

int FiniteRing::inv(int a) const {
    if (a < 0 || a >= n_) throw std::invalid_argument("ring: element out of range");
    if (inv_[a] < 0)
        throw std::invalid_argument("ring: " + element_name(a) + " is not a unit in " + desc_);
    return inv_[a];
}

bool FiniteRing::is_central(int a) const {
    for (int s = 0; s < n_; ++s)
        if (mul(a, s) != mul(s, a)) return false;
    return true;
}

std::string FiniteRing::element_name(int a) const {
    if (a < 0 || a >= n_) return "?";
    if (backend_ == RingBackend::Zmod) return std::to_string(a);
    if (is_group_ring()) {
        auto c = gr_decode(a);
        std::string out;
        for (int h = 0; h < gr_order_; ++h) {
            if (c[h] == 0) continue;
            if (!out.empty()) out += "+";
            out += std::to_string(c[h]) + "*" + gr_names_[h];
        }
        return out.empty() ? "0" : out;
    }
    if (backend_ == RingBackend::Poly) {
        int p = gr_coeff_size_;  // reused as the coefficient prime for Poly
        std::string out;
        int v = a;
        for (int i = 0; v > 0; ++i, v /= p) {
            int c = v % p;
            if (c == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0)
                out += std::to_string(c);
            else {
                out += (c == 1 ? "" : std::to_string(c) + "*");
                out += (i == 1 ? "x" : "x^" + std::to_string(i));
            }
        }
        return out.empty() ? "0" : out;
    }
    return "#" + std::to_string(a);
}

void FiniteRing::finish_tables() {
    const int n = n_;
    if ((int)add_.size() != n * n || (int)mul_.size() != n * n)
        throw std::invalid_argument("ring: table size mismatch");
    for (int x : add_)
        if (x < 0 || x >= n) throw std::invalid_argument("ring: add entry out of range");
    for (int x : mul_)
        if (x < 0 || x >= n) throw std::invalid_argument("ring: mul entry out of range");

    // additive group: 0 is required to be the index of zero
    for (int a = 0; a < n; ++a)
        if (add(a, 0) != a || add(0, a) != a)
            throw std::invalid_argument("ring: index 0 is not an additive unit");
    neg_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (add(a, b) == 0 && add(b, a) == 0) {
                neg_[a] = b;
                break;
            }
        if (neg_[a] < 0) throw std::invalid_argument("ring: element without negative");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (add(a, b) != add(b, a)) throw std::invalid_argument("ring: addition not commutative");
            for (int c = 0; c < n; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c)))
                    throw std::invalid_argument("ring: addition not associative");
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("ring: multiplication not associative");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    throw std::invalid_argument("ring: left distributivity fails");
                if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
                    throw std::invalid_argument("ring: right distributivity fails");
            }
        }

    one_ = -1;
    for (int c = 0; c < n; ++c) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = mul(c, a) == a && mul(a, c) == a;
        if (ok) {
            one_ = c;
            break;
        }
    }
    if (one_ < 0) throw std::invalid_argument("ring: no multiplicative unit");

    inv_.assign(n, -1);
    units_.clear();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == one_ && mul(b, a) == one_) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] >= 0) units_.push_back(a);
    }
}

FiniteRing FiniteRing::zmod(int n) {
    if (n < 2 || n > 65536) throw std::invalid_argument("zmod: n must be in [2, 65536]");
    FiniteRing r;
    r.backend_ = RingBackend::Zmod;
    r.n_ = n;
    r.one_ = 1;
    r.desc_ = "Z/" + std::to_string(n);
    r.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        // extended gcd for a modular inverse
        long long r0 = a, r1 = n, s0 = 1, s1 = 0;
        while (r1 != 0) {
            long long q = r0 / r1;
            long long r2 = r0 - q * r1, s2 = s0 - q * s1;
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        if (r0 == 1) {
            r.inv_[a] = (int)((s0 % n + n) % n);
            r.units_.push_back(a);
        }
    }
    return r;
}

FiniteRing FiniteRing::poly_quotient(int p, std::vector<int> monic) {
    if (!is_prime(p)) throw std::invalid_argument("poly_quotient: p must be prime");
    int deg = (int)monic.size() - 1;
    if (deg < 1) throw std::invalid_argument("poly_quotient: modulus degree must be >= 1");
    for (int& c : monic) c = ((c % p) + p) % p;
    if (monic.back() != 1) throw std::invalid_argument("poly_quotient: modulus must be monic");
    long long size = 1;
    for (int i = 0; i < deg; ++i) {
        size *= p;
        if (size > 64) throw std::invalid_argument("poly_quotient: carrier exceeds 64 elements");
    }
    const int n = (int)size;

    auto decode = [&](int a) {
        std::vector<int> c(deg);
        for (int i = 0; i < deg; ++i, a /= p) c[i] = a % p;
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int a = 0;
        for (int i = deg - 1; i >= 0; --i) a = a * p + c[i];
        return a;
    };

    FiniteRing r;
    r.backend_ = RingBackend::Poly;
    r.n_ = n;
    r.gr_coeff_size_ = p;  // stash the prime for element_name
    r.add_.resize(n * n);
    r.mul_.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto ca = decode(a), cb = decode(b);
            std::vector<int> s(deg);
            for (int i = 0; i < deg; ++i) s[i] = (ca[i] + cb[i]) % p;
            r.add_[a * n + b] = encode(s);

            std::vector<int> prod(2 * deg - 1, 0);
            for (int i = 0; i < deg; ++i)
                for (int j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            // reduce mod the monic modulus
            for (int i = 2 * deg - 2; i >= deg; --i) {
                int c = prod[i];
                if (c == 0) continue;
                for (int j = 0; j < deg; ++j)
                    prod[i - deg + j] = ((prod[i - deg + j] - c * monic[j]) % p + p) % p;
                prod[i] = 0;
            }
            prod.resize(deg);
            r.mul_[a * n + b] = encode(prod);
        }
    r.finish_tables();

    std::string mod_name;
    for (int i = deg; i >= 0; --i) {
        if (monic[i] == 0) continue;
        if (!mod_name.empty()) mod_name += "+";
        if (i == 0)
            mod_name += std::to_string(monic[i]);
        else
            mod_name += (monic[i] == 1 ? "" : std::to_string(monic[i]) + "*") +
                        (i == 1 ? std::string("x") : "x^" + std::to_string(i));
    }
    r.desc_ = "Z/" + std::to_string(p) + "[x]/(" + mod_name + ")";
    r.gr_coeff_size_ = p;  // finish_tables does not touch it, keep explicit
    return r;
}

FiniteRing FiniteRing::from_tables(std::vector<int> add, std::vector<int> mul, std::string desc) {
    FiniteRing r;
    r.backend_ = RingBackend::Table;
    long long n2 = (long long)add.size();
    int n = 0;
    while ((long long)n * n < n2) ++n;
    if ((long long)n * n != n2 || n < 1 || n > 64)
        throw std::invalid_argument("from_tables: carrier must have 1..64 elements");
    r.n_ = n;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.finish_tables();
    r.desc_ = desc.empty() ? "table(" + std::to_string(n) + ")" : std::move(desc);
    return r;
}

FiniteRing FiniteRing::group_ring(const FiniteRing& coeff, const FiniteGroup& h) {
    long long size = 1;
    for (int i = 0; i < h.m; ++i) {
        size *= coeff.size();
        if (size > 64) throw std::invalid_argument("group_ring: carrier exceeds 64 elements");
    }
    const int n = (int)size, cn = coeff.size(), m = h.m;

    auto decode = [&](int a) {
        std::vector<int> c(m);
        for (int i = 0; i < m; ++i, a /= cn) c[i] = a % cn;
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int a = 0;
        for (int i = m - 1; i >= 0; --i) a = a * cn + c[i];
        return a;
    };

    FiniteRing r;
    r.backend_ = RingBackend::Table;
    r.n_ = n;
    r.add_.resize(n * n);
    r.mul_.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto ca = decode(a), cb = decode(b);
            std::vector<int> s(m), prod(m, 0);
            for (int i = 0; i < m; ++i) s[i] = coeff.add(ca[i], cb[i]);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    int k = h.mul(i, j);
                    prod[k] = coeff.add(prod[k], coeff.mul(ca[i], cb[j]));
                }
            r.add_[a * n + b] = encode(s);
            r.mul_[a * n + b] = encode(prod);
        }
    r.finish_tables();
    r.gr_coeff_size_ = cn;
    r.gr_order_ = m;
    r.gr_names_.resize(m);
    for (int i = 0; i < m; ++i) r.gr_names_[i] = h.name(i);
    r.desc_ = coeff.desc() + "[" + (h.m == 2 ? "C2" : "G" + std::to_string(h.m)) + "]";
    return r;
}

FiniteRing FiniteRing::materialize() const {
    if (n_ > 64) throw std::invalid_argument("materialize: carrier exceeds 64 elements");
    std::vector<int> add(n_ * n_), mul(n_ * n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            add[a * n_ + b] = this->add(a, b);
            mul[a * n_ + b] = this->mul(a, b);
        }
    return from_tables(std::move(add), std::move(mul), desc_ + " (materialized)");
}

std::vector<int> FiniteRing::gr_decode(int a) const {
    if (!is_group_ring()) throw std::invalid_argument("gr_decode: not a group ring");
    std::vector<int> c(gr_order_);
    for (int i = 0; i < gr_order_; ++i, a /= gr_coeff_size_) c[i] = a % gr_coeff_size_;
    return c;
}

int FiniteRing::gr_encode(const std::vector<int>& c) const {
    if (!is_group_ring()) throw std::invalid_argument("gr_encode: not a group ring");
    if ((int)c.size() != gr_order_) throw std::invalid_argument("gr_encode: size mismatch");
    int a = 0;
    for (int i = gr_order_ - 1; i >= 0; --i) {
        if (c[i] < 0 || c[i] >= gr_coeff_size_)
            throw std::invalid_argument("gr_encode: coefficient out of range");
        a = a * gr_coeff_size_ + c[i];
    }
    return a;
}

int FiniteRing::gr_basis(int coeff, int h) const {
    std::vector<int> c(gr_order_, 0);
    c.at(h) = coeff;
    return gr_encode(c);
}

RingAut RingAut::identity(int n) {
    RingAut a;
    a.img.resize(n);
    a.inv.resize(n);
    for (int i = 0; i < n; ++i) a.img[i] = a.inv[i] = i;
    return a;
}

RingAut RingAut::from_table(std::vector<int> img) {
    const int n = (int)img.size();
    RingAut a;
    a.inv.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = img[i];
        if (v < 0 || v >= n || a.inv[v] >= 0)
            throw std::invalid_argument("ring map: image table is not a bijection");
        a.inv[v] = i;
    }
    a.img = std::move(img);
    return a;
}

bool RingAut::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img[i] != i) return false;
    return true;
}

RingAut compose_aut(const RingAut& a, const RingAut& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose_aut: size mismatch");
    RingAut c;
    c.img.resize(a.size());
    c.inv.resize(a.size());
    for (int i = 0; i < a.size(); ++i) {
        c.img[i] = a.img[b.img[i]];
        c.inv[i] = b.inv[a.inv[i]];
    }
    return c;
}

RingAut inverse_aut(const RingAut& a) {
    RingAut b;
    b.img = a.inv;
    b.inv = a.img;
    return b;
}

namespace {

bool is_bijection(int n, const std::vector<int>& img) {
    if ((int)img.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : img) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

bool is_automorphism(const FiniteRing& r, const std::vector<int>& img) {
    const int n = r.size();
    if (!is_bijection(n, img)) return false;
    if (img[r.one()] != r.one()) return false;
    if (n <= 256) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (img[r.add(a, b)] != r.add(img[a], img[b])) return false;
                if (img[r.mul(a, b)] != r.mul(img[a], img[b])) return false;
            }
        return true;
    }
    Lcg rng;
    for (int i = 0; i < 100000; ++i) {
        int a = rng.below(n), b = rng.below(n);
        if (img[r.add(a, b)] != r.add(img[a], img[b])) return false;
        if (img[r.mul(a, b)] != r.mul(img[a], img[b])) return false;
    }
    return true;
}

bool is_ring_involution(const FiniteRing& r, const std::vector<int>& img) {
    const int n = r.size();
    if (!is_bijection(n, img)) return false;
    if (img[r.one()] != r.one()) return false;
    for (int a = 0; a < n; ++a)
        if (img[img[a]] != a) return false;
    if (n <= 256) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (img[r.add(a, b)] != r.add(img[a], img[b])) return false;
                if (img[r.mul(a, b)] != r.mul(img[b], img[a])) return false;
            }
        return true;
    }
    Lcg rng;
    for (int i = 0; i < 100000; ++i) {
        int a = rng.below(n), b = rng.below(n);
        if (img[r.add(a, b)] != r.add(img[a], img[b])) return false;
        if (img[r.mul(a, b)] != r.mul(img[b], img[a])) return false;
    }
    return true;
}

std::vector<int> power_map(const FiniteRing& r, int k) {
    if (k < 1) throw std::invalid_argument("power_map: exponent must be >= 1");
    std::vector<int> img(r.size());
    for (int a = 0; a < r.size(); ++a) {
        int v = a;
        for (int i = 1; i < k; ++i) v = r.mul(v, a);
        img[a] = v;
    }
    return img;
}

}  // namespace xprod
