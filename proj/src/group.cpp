#include "xprod/group.hpp"

#include <stdexcept>

namespace xprod {

namespace {

void check_group_axioms(FiniteGroup& g) {
    const int m = g.m;
    if (m <= 0) throw std::invalid_argument("group: order must be positive");
    if ((int)g.mul_.size() != m * m) throw std::invalid_argument("group: table size mismatch");
    for (int x : g.mul_)
        if (x < 0 || x >= m) throw std::invalid_argument("group: table entry out of range");

    // locate the unit
    int e = -1;
    for (int c = 0; c < m; ++c) {
        bool ok = true;
        for (int a = 0; a < m && ok; ++a)
            ok = g.mul(c, a) == a && g.mul(a, c) == a;
        if (ok) {
            e = c;
            break;
        }
    }
    if (e < 0) throw std::invalid_argument("group: no two-sided unit");
    g.e = e;

    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw std::invalid_argument("group: multiplication not associative");

    g.inv_.assign(m, -1);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b)
            if (g.mul(a, b) == e && g.mul(b, a) == e) {
                g.inv_[a] = b;
                break;
            }
        if (g.inv_[a] < 0) throw std::invalid_argument("group: element without inverse");
    }
}

}  // namespace

std::string FiniteGroup::name(int a) const {
    if (a == e) return "e";
    if (m == 2) return "t";
    return "g" + std::to_string(a);
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n <= 0) throw std::invalid_argument("cyclic: order must be positive");
    FiniteGroup g;
    g.m = n;
    g.mul_.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.mul_[a * n + b] = (a + b) % n;
    check_group_axioms(g);
    return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& mul) {
    FiniteGroup g;
    g.m = (int)mul.size();
    for (const auto& row : mul) {
        if ((int)row.size() != g.m) throw std::invalid_argument("group: table not square");
        g.mul_.insert(g.mul_.end(), row.begin(), row.end());
    }
    check_group_axioms(g);
    return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.m = a.m * b.m;
    g.mul_.resize(g.m * g.m);
    for (int x1 = 0; x1 < a.m; ++x1)
        for (int y1 = 0; y1 < b.m; ++y1)
            for (int x2 = 0; x2 < a.m; ++x2)
                for (int y2 = 0; y2 < b.m; ++y2) {
                    int i = pair_index(b, x1, y1), j = pair_index(b, x2, y2);
                    g.mul_[i * g.m + j] = pair_index(b, a.mul(x1, x2), b.mul(y1, y2));
                }
    check_group_axioms(g);
    return g;
}

bool is_group_hom(const FiniteGroup& k, const FiniteGroup& g, const std::vector<int>& f) {
    if ((int)f.size() != k.m) return false;
    for (int x : f)
        if (x < 0 || x >= g.m) return false;
    if (f[k.e] != g.e) return false;
    for (int a = 0; a < k.m; ++a)
        for (int b = 0; b < k.m; ++b)
            if (f[k.mul(a, b)] != g.mul(f[a], f[b])) return false;
    return true;
}

void SignHom::validate(const FiniteGroup& g) const {
    if ((int)values.size() != g.m) throw std::invalid_argument("sign hom: size mismatch");
    for (int v : values)
        if (v != 1 && v != -1) throw std::invalid_argument("sign hom: values must be +1 or -1");
    if (values[g.e] != 1) throw std::invalid_argument("sign hom: v(e) must be +1");
    for (int a = 0; a < g.m; ++a)
        for (int b = 0; b < g.m; ++b)
            if (values[g.mul(a, b)] != values[a] * values[b])
                throw std::invalid_argument("sign hom: not multiplicative");
}

}  // namespace xprod
