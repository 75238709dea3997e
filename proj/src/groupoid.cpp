#include "xprod/groupoid.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace xprod {

static void check_gset(const FiniteGroup& G, int n, const std::vector<int>& act) {
    if (n <= 0) throw std::invalid_argument("GSet: need at least one point");
    if ((int)act.size() != G.m * n) throw std::invalid_argument("GSet: action table has wrong size");
    for (int v : act)
        if (v < 0 || v >= n) throw std::invalid_argument("GSet: action table entry out of range");
    for (int x = 0; x < n; ++x)
        if (act[G.e * n + x] != x) throw std::invalid_argument("GSet: identity does not act trivially");
    for (int g = 0; g < G.m; ++g)
        for (int h = 0; h < G.m; ++h)
            for (int x = 0; x < n; ++x)
                if (act[G.mul(g, h) * n + x] != act[g * n + act[h * n + x]])
                    throw std::invalid_argument("GSet: action is not associative at (" +
                                                std::to_string(g) + "," + std::to_string(h) + "," +
                                                std::to_string(x) + ")");
}

GSet GSet::from_table(FiniteGroup g, const std::vector<std::vector<int>>& table) {
    if ((int)table.size() != g.m) throw std::invalid_argument("GSet: one row per group element required");
    int n = table.empty() ? 0 : (int)table[0].size();
    std::vector<int> flat;
    flat.reserve((size_t)g.m * n);
    for (const auto& row : table) {
        if ((int)row.size() != n) throw std::invalid_argument("GSet: ragged action table");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    check_gset(g, n, flat);
    return GSet{std::move(g), n, std::move(flat)};
}

GSet GSet::regular(const FiniteGroup& g) {
    GSet s;
    s.G = g;
    s.n = g.m;
    s.act_.resize((size_t)g.m * g.m);
    for (int a = 0; a < g.m; ++a)
        for (int x = 0; x < g.m; ++x) s.act_[a * g.m + x] = g.mul(a, x);
    return s;
}

GSet GSet::trivial(const FiniteGroup& g, int n) {
    GSet s;
    s.G = g;
    s.n = n;
    s.act_.resize((size_t)g.m * n);
    for (int a = 0; a < g.m; ++a)
        for (int x = 0; x < n; ++x) s.act_[a * n + x] = x;
    return s;
}

GSet GSet::one_point(const FiniteGroup& g) { return trivial(g, 1); }

bool GSet::transitive() const {
    std::set<int> orbit;
    for (int g = 0; g < G.m; ++g) orbit.insert(act(g, 0));
    return (int)orbit.size() == n;
}

GSet Biset::left_gset() const { return GSet{K, n, left_}; }

Biset Biset::from_tables(FiniteGroup k, FiniteGroup g, int n, std::vector<int> left,
                         std::vector<int> right) {
    check_gset(k, n, left);
    if ((int)right.size() != n * g.m) throw std::invalid_argument("Biset: right table has wrong size");
    for (int v : right)
        if (v < 0 || v >= n) throw std::invalid_argument("Biset: right table entry out of range");
    for (int x = 0; x < n; ++x)
        if (right[x * g.m + g.e] != x) throw std::invalid_argument("Biset: right identity fails");
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < g.m; ++a)
            for (int b = 0; b < g.m; ++b)
                if (right[right[x * g.m + a] * g.m + b] != right[x * g.m + g.mul(a, b)])
                    throw std::invalid_argument("Biset: right action is not associative");
    for (int c = 0; c < k.m; ++c)
        for (int x = 0; x < n; ++x)
            for (int a = 0; a < g.m; ++a)
                if (right[left[c * n + x] * g.m + a] != left[c * n + right[x * g.m + a]])
                    throw std::invalid_argument("Biset: left and right actions do not commute");
    Biset b;
    b.K = std::move(k);
    b.G = std::move(g);
    b.n = n;
    b.left_ = std::move(left);
    b.right_ = std::move(right);
    return b;
}

Biset Biset::pullback_group(const FiniteGroup& k, const FiniteGroup& g,
                            const std::vector<int>& phi) {
    if ((int)phi.size() != k.m) throw std::invalid_argument("pullback_group: phi has wrong size");
    if (phi[k.e] != g.e) throw std::invalid_argument("pullback_group: phi does not preserve identity");
    for (int a = 0; a < k.m; ++a)
        for (int b = 0; b < k.m; ++b)
            if (phi[k.mul(a, b)] != g.mul(phi[a], phi[b]))
                throw std::invalid_argument("pullback_group: phi is not a homomorphism");
    std::vector<int> left((size_t)k.m * g.m), right((size_t)g.m * g.m);
    for (int c = 0; c < k.m; ++c)
        for (int x = 0; x < g.m; ++x) left[c * g.m + x] = g.mul(phi[c], x);
    for (int x = 0; x < g.m; ++x)
        for (int a = 0; a < g.m; ++a) right[x * g.m + a] = g.mul(x, a);
    return from_tables(k, g, g.m, std::move(left), std::move(right));
}

Arrow TransportGroupoid::compose(const Arrow& f2, const Arrow& f1) const {
    if (f2.src != tgt(f1))
        throw std::invalid_argument("TransportGroupoid::compose: endpoints do not match");
    return {X.G.mul(f2.g, f1.g), f1.src};
}

std::vector<Arrow> TransportGroupoid::hom(int x, int y) const {
    std::vector<Arrow> out;
    for (int g = 0; g < X.G.m; ++g)
        if (X.act(g, x) == y) out.push_back({g, x});
    return out;
}

std::vector<Arrow> TransportGroupoid::arrows_from(int x) const {
    std::vector<Arrow> out;
    for (int g = 0; g < X.G.m; ++g) out.push_back({g, x});
    return out;
}

std::vector<Arrow> TransportGroupoid::all_arrows() const {
    std::vector<Arrow> out;
    for (int x = 0; x < X.n; ++x)
        for (int g = 0; g < X.G.m; ++g) out.push_back({g, x});
    return out;
}

TransportGroupoid transport_groupoid(const GSet& x) { return TransportGroupoid{x}; }

GroupoidFunctor make_groupoid_functor(TransportGroupoid source, TransportGroupoid target,
                                      std::vector<int> obj_map,
                                      std::function<Arrow(const Arrow&)> arrow_map) {
    if ((int)obj_map.size() != source.n_objects())
        throw std::invalid_argument("groupoid functor: object map has wrong size");
    for (int v : obj_map)
        if (v < 0 || v >= target.n_objects())
            throw std::invalid_argument("groupoid functor: object map out of range");
    for (const Arrow& f : source.all_arrows()) {
        Arrow w = arrow_map(f);
        if (w.src != obj_map[f.src] || target.tgt(w) != obj_map[source.tgt(f)])
            throw std::invalid_argument("groupoid functor: arrow map breaks endpoints");
    }
    for (int x = 0; x < source.n_objects(); ++x)
        if (!(arrow_map(source.id(x)) == target.id(obj_map[x])))
            throw std::invalid_argument("groupoid functor: identities not preserved");
    for (const Arrow& f1 : source.all_arrows()) {
        int y = source.tgt(f1);
        for (const Arrow& f2 : source.arrows_from(y)) {
            Arrow lhs = arrow_map(source.compose(f2, f1));
            Arrow rhs = target.compose(arrow_map(f2), arrow_map(f1));
            if (!(lhs == rhs))
                throw std::invalid_argument("groupoid functor: composition not preserved");
        }
    }
    return GroupoidFunctor{std::move(source), std::move(target), std::move(obj_map),
                           std::move(arrow_map)};
}

GroupoidFunctor transport_of_gmap(const GSet& src, const GSet& tgt, const std::vector<int>& a) {
    if (!(src.G == tgt.G))
        throw std::invalid_argument("transport_of_gmap: the two G-sets have different groups");
    if ((int)a.size() != src.n) throw std::invalid_argument("transport_of_gmap: map has wrong size");
    for (int g = 0; g < src.G.m; ++g)
        for (int x = 0; x < src.n; ++x)
            if (a[src.act(g, x)] != tgt.act(g, a[x]))
                throw std::invalid_argument("transport_of_gmap: map is not equivariant");
    std::vector<int> amap = a;
    return make_groupoid_functor(transport_groupoid(src), transport_groupoid(tgt), a,
                                 [amap](const Arrow& f) { return Arrow{f.g, amap[f.src]}; });
}

GroupoidFunctor compose_functors(const GroupoidFunctor& w2, const GroupoidFunctor& w1) {
    std::vector<int> obj(w1.obj_map.size());
    for (size_t i = 0; i < obj.size(); ++i) obj[i] = w2.obj_map[w1.obj_map[i]];
    auto a1 = w1.arrow_map;
    auto a2 = w2.arrow_map;
    return make_groupoid_functor(w1.source, w2.target, std::move(obj),
                                 [a1, a2](const Arrow& f) { return a2(a1(f)); });
}

GroupoidFunctor identity_functor(const TransportGroupoid& g) {
    std::vector<int> obj(g.n_objects());
    for (int x = 0; x < g.n_objects(); ++x) obj[x] = x;
    return make_groupoid_functor(g, g, std::move(obj), [](const Arrow& f) { return f; });
}

bool is_groupoid_equivalence(const GroupoidFunctor& w) {
    std::set<int> iso_hit;  // objects of the target hit up to isomorphism
    for (int x = 0; x < w.source.n_objects(); ++x) iso_hit.insert(w.obj_map[x]);
    for (int y = 0; y < w.target.n_objects(); ++y) {
        bool reached = false;
        for (int z : iso_hit)
            if (!w.target.hom(z, y).empty()) reached = true;
        if (!reached) return false;
    }
    for (int x = 0; x < w.source.n_objects(); ++x)
        for (int y = 0; y < w.source.n_objects(); ++y) {
            auto fs = w.source.hom(x, y);
            std::set<std::pair<int, int>> images;
            for (const Arrow& f : fs) {
                Arrow u = w.arrow_map(f);
                images.insert({u.g, u.src});
            }
            if (images.size() != fs.size()) return false;  // not faithful
            if (images.size() != w.target.hom(w.obj_map[x], w.obj_map[y]).size())
                return false;  // not full
        }
    return true;
}

}  // namespace xprod
