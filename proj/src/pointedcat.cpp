#include "xmodkit/pointedcat.hpp"

#include "xmodkit/catalog.hpp"
#include "xmodkit/errors.hpp"

#include <algorithm>

namespace xmk {

std::string instance_name(Instance i) {
    switch (i) {
        case Instance::Grp: return "grp";
        case Instance::Ab: return "ab";
        case Instance::PSet: return "pset";
    }
    return "?";
}

int PointedObject::size() const {
    return instance == Instance::PSet ? pset_size : grp->order();
}

void PointedObject::validate() const {
    if (instance == Instance::PSet) {
        if (pset_size < 1) fail("InvalidObject", "pointed set needs at least the basepoint");
        return;
    }
    if (!grp) fail("InvalidObject", "missing group payload");
    if (instance == Instance::Ab && !grp->abelian())
        fail("InvalidObject", "Ab payload is not commutative");
}

PointedObject PointedObject::group(GroupPtr g) {
    PointedObject o{Instance::Grp, std::move(g), 0};
    o.validate();
    return o;
}

PointedObject PointedObject::abelian(GroupPtr g) {
    PointedObject o{Instance::Ab, std::move(g), 0};
    o.validate();
    return o;
}

PointedObject PointedObject::pset(int n) {
    PointedObject o{Instance::PSet, nullptr, n};
    o.validate();
    return o;
}

bool same_object(const PointedObject& a, const PointedObject& b) {
    if (a.instance != b.instance) return false;
    if (a.instance == Instance::PSet) return a.pset_size == b.pset_size;
    return a.grp->same_table(*b.grp);
}

void PointedMap::validate() const {
    if (dom.instance != instance || cod.instance != instance)
        fail("InstanceMismatch", "map endpoints from different instances");
    if (static_cast<int>(map.size()) != dom.size()) fail("InvalidMap", "map has wrong length");
    for (int v : map)
        if (v < 0 || v >= cod.size()) fail("InvalidMap", "map value out of range");
    if (map[0] != 0) fail("InvalidMap", "basepoint not preserved");
    if (instance != Instance::PSet) {
        GroupHom h{dom.grp, cod.grp, map};
        h.validate();
    }
}

bool PointedMap::is_bijective() const {
    if (dom.size() != cod.size()) return false;
    std::vector<char> seen(map.size(), 0);
    for (int v : map) {
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

PointedMap PointedMap::identity(const PointedObject& a) {
    PointedMap m{a.instance, a, a, std::vector<int>(static_cast<std::size_t>(a.size()))};
    for (int i = 0; i < a.size(); ++i) m.map[static_cast<std::size_t>(i)] = i;
    return m;
}

PointedMap PointedMap::zero(const PointedObject& dom, const PointedObject& cod) {
    return PointedMap{dom.instance, dom, cod,
                      std::vector<int>(static_cast<std::size_t>(dom.size()), 0)};
}

PointedMap compose(const PointedMap& g, const PointedMap& f) {
    if (f.instance != g.instance) fail("InstanceMismatch", "composing across instances");
    if (!same_object(f.cod, g.dom)) fail("CodomainMismatch", "compose: cod(f) != dom(g)");
    PointedMap out{f.instance, f.dom, g.cod, f.map};
    for (int& v : out.map) v = g.map[static_cast<std::size_t>(v)];
    return out;
}

std::vector<PointedMap> enumerate_pointed_maps(const PointedObject& dom, const PointedObject& cod) {
    std::vector<PointedMap> out;
    if (dom.instance == Instance::PSet) {
        int n = dom.size(), m = cod.size();
        std::vector<int> map(static_cast<std::size_t>(n), 0);
        while (true) {
            out.push_back(PointedMap{Instance::PSet, dom, cod, map});
            int i = n - 1;
            while (i >= 1 && map[static_cast<std::size_t>(i)] == m - 1)
                map[static_cast<std::size_t>(i--)] = 0;
            if (i < 1) break;
            ++map[static_cast<std::size_t>(i)];
        }
        return out;
    }
    for (auto& h : enumerate_homs(dom.grp, cod.grp))
        out.push_back(PointedMap{dom.instance, dom, cod, h.map});
    return out;
}

std::vector<PointedObject> test_objects(Instance ins, int bound) {
    std::vector<PointedObject> out;
    if (ins == Instance::PSet) {
        for (int n = 1; n <= bound; ++n) out.push_back(PointedObject::pset(n));
        return out;
    }
    auto named = ins == Instance::Ab ? abelian_groups_up_to_order(bound)
                                     : groups_up_to_order(bound);
    for (auto& [name, g] : named)
        out.push_back(ins == Instance::Ab ? PointedObject::abelian(g) : PointedObject::group(g));
    return out;
}

void Cospan::validate() const {
    k.validate();
    s.validate();
    if (!same_object(k.dom, X) || !same_object(s.dom, B) || !same_object(k.cod, Y) ||
        !same_object(s.cod, Y))
        fail("InvalidCospan", "legs do not match the stated objects");
}

void PatchWitness::validate() const {
    cospan.validate();
    p.validate();
    if (!same_object(p.dom, cospan.Y) || !same_object(p.cod, cospan.B))
        fail("InvalidPatch", "retraction endpoints mismatch");
    if (compose(p, cospan.s).map != PointedMap::identity(cospan.B).map)
        fail("InvalidPatch", "p s != 1");
    for (int v : compose(p, cospan.k).map)
        if (v != 0) fail("InvalidPatch", "p k != 0");
    if (!jointly_epimorphic(cospan.k, cospan.s))
        fail("InvalidPatch", "(k,s) not jointly epimorphic");
}

void Point::validate() const {
    p.validate();
    s.validate();
    if (!same_object(p.dom, Y) || !same_object(p.cod, B) || !same_object(s.dom, B) ||
        !same_object(s.cod, Y))
        fail("InvalidPoint", "endpoints mismatch");
    if (compose(p, s).map != PointedMap::identity(B).map) fail("InvalidPoint", "p s != 1");
}

void SplitExtension::validate() const {
    point.validate();
    k.validate();
    auto [ker, incl] = pointed_kernel(point.p);
    if (!same_object(k.dom, X)) fail("InvalidExtension", "kernel leg domain mismatch");
    // k must be a bijection of X onto the kernel of p
    std::vector<int> img(k.map), fib(incl.map);
    std::sort(img.begin(), img.end());
    std::sort(fib.begin(), fib.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end())
        fail("InvalidExtension", "kernel leg not injective");
    if (img != fib) fail("InvalidExtension", "k is not the kernel of p");
}

bool jointly_epimorphic(const PointedMap& k, const PointedMap& s) {
    if (k.instance != s.instance) fail("InstanceMismatch", "legs from different instances");
    if (!same_object(k.cod, s.cod)) fail("CodomainMismatch", "legs have different codomains");
    const PointedObject& Y = k.cod;
    if (k.instance == Instance::PSet) {
        std::vector<char> hit(static_cast<std::size_t>(Y.size()), 0);
        for (int v : k.map) hit[static_cast<std::size_t>(v)] = 1;
        for (int v : s.map) hit[static_cast<std::size_t>(v)] = 1;
        return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    }
    std::vector<int> gens(k.map);
    gens.insert(gens.end(), s.map.begin(), s.map.end());
    return generated_subgroup(Y.grp, gens).sub->order() == Y.size();
}

std::optional<std::vector<int>> forced_group_map(const FiniteGroup& dom, const FiniteGroup& cod,
                                                 const std::vector<std::pair<int, int>>& seeds) {
    std::vector<int> val(static_cast<std::size_t>(dom.order()), -1);
    val[0] = 0;
    for (auto [a, v] : seeds) {
        if (val[static_cast<std::size_t>(a)] >= 0 && val[static_cast<std::size_t>(a)] != v)
            return std::nullopt;
        val[static_cast<std::size_t>(a)] = v;
    }
    std::vector<int> known;
    for (int a = 0; a < dom.order(); ++a)
        if (val[static_cast<std::size_t>(a)] >= 0) known.push_back(a);
    for (std::size_t i = 0; i < known.size(); ++i)
        for (std::size_t j = 0; j < known.size(); ++j) {
            int a = known[i], b = known[j];
            int c = dom.mul(a, b);
            int v = cod.mul(val[static_cast<std::size_t>(a)], val[static_cast<std::size_t>(b)]);
            if (val[static_cast<std::size_t>(c)] < 0) {
                val[static_cast<std::size_t>(c)] = v;
                known.push_back(c);
            } else if (val[static_cast<std::size_t>(c)] != v) {
                return std::nullopt;
            }
        }
    if (static_cast<int>(known.size()) != dom.order()) return std::nullopt;
    for (int a = 0; a < dom.order(); ++a)
        for (int b = 0; b < dom.order(); ++b)
            if (val[static_cast<std::size_t>(dom.mul(a, b))] !=
                cod.mul(val[static_cast<std::size_t>(a)], val[static_cast<std::size_t>(b)]))
                return std::nullopt;
    return val;
}

std::optional<PointedMap> patch_retraction(const Cospan& c) {
    if (!jointly_epimorphic(c.k, c.s)) return std::nullopt;
    if (c.k.instance == Instance::PSet) {
        std::vector<int> val(static_cast<std::size_t>(c.Y.size()), -1);
        auto assign = [&](int y, int v) {
            if (val[static_cast<std::size_t>(y)] >= 0) return val[static_cast<std::size_t>(y)] == v;
            val[static_cast<std::size_t>(y)] = v;
            return true;
        };
        for (std::size_t x = 0; x < c.k.map.size(); ++x)
            if (!assign(c.k.map[x], 0)) return std::nullopt;
        for (std::size_t b = 0; b < c.s.map.size(); ++b)
            if (!assign(c.s.map[b], static_cast<int>(b))) return std::nullopt;
        return PointedMap{Instance::PSet, c.Y, c.B, std::move(val)};
    }
    std::vector<std::pair<int, int>> seeds;
    for (std::size_t x = 0; x < c.k.map.size(); ++x) seeds.emplace_back(c.k.map[x], 0);
    for (std::size_t b = 0; b < c.s.map.size(); ++b)
        seeds.emplace_back(c.s.map[b], static_cast<int>(b));
    auto val = forced_group_map(*c.Y.grp, *c.B.grp, seeds);
    if (!val) return std::nullopt;
    return PointedMap{c.k.instance, c.Y, c.B, std::move(*val)};
}

std::pair<PointedObject, PointedMap> pointed_kernel(const PointedMap& p) {
    if (p.instance == Instance::PSet) {
        std::vector<int> fiber;
        for (int y = 0; y < p.dom.size(); ++y)
            if (p.map[static_cast<std::size_t>(y)] == 0) fiber.push_back(y);
        auto X = PointedObject::pset(static_cast<int>(fiber.size()));
        return {X, PointedMap{Instance::PSet, X, p.dom, std::move(fiber)}};
    }
    GroupHom h{p.dom.grp, p.cod.grp, p.map};
    auto ker = kernel(h);
    PointedObject X = p.instance == Instance::Ab ? PointedObject::abelian(ker.sub)
                                                 : PointedObject::group(ker.sub);
    return {X, PointedMap{p.instance, X, p.dom, ker.inclusion.map}};
}

bool is_exact_patch(const PatchWitness& w) {
    const auto& k = w.cospan.k;
    // injectivity of k
    std::vector<int> img(k.map);
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
    auto [ker, incl] = pointed_kernel(w.p);
    std::vector<int> fib(incl.map);
    std::sort(fib.begin(), fib.end());
    return img == fib;
}

namespace {

/// Pullback of the point along h together with the cospan induced from the
/// given leg k: X -> Y (which must satisfy p k = 0).
PulledBackPoint pullback_with_leg(const Point& pt, const PointedMap& h, const PointedObject& X,
                                  const PointedMap& k) {
    if (!same_object(h.cod, pt.B)) fail("CodomainMismatch", "h must land in the point's base");
    const PointedObject& Z = h.dom;
    PulledBackPoint out;
    if (pt.p.instance == Instance::PSet) {
        std::vector<std::pair<int, int>> pairs;
        for (int y = 0; y < pt.Y.size(); ++y)
            for (int z = 0; z < Z.size(); ++z)
                if (pt.p.map[static_cast<std::size_t>(y)] == h.map[static_cast<std::size_t>(z)])
                    pairs.emplace_back(y, z);
        auto index_of = [&](int y, int z) {
            auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(y, z));
            return static_cast<int>(it - pairs.begin());
        };
        auto Q = PointedObject::pset(static_cast<int>(pairs.size()));
        PointedMap pp{Instance::PSet, Q, Z, {}};
        for (auto& [y, z] : pairs) pp.map.push_back(z);
        PointedMap sp{Instance::PSet, Z, Q, {}};
        for (int z = 0; z < Z.size(); ++z)
            sp.map.push_back(index_of(pt.s.map[static_cast<std::size_t>(
                                          h.map[static_cast<std::size_t>(z)])],
                                      z));
        PointedMap kp{Instance::PSet, X, Q, {}};
        for (int v : k.map) kp.map.push_back(index_of(v, 0));
        out.point = Point{Q, Z, pp, sp};
        out.cospan = Cospan{X, Q, Z, kp, sp};
        return out;
    }
    GroupHom ph{pt.Y.grp, pt.B.grp, pt.p.map};
    GroupHom hh{Z.grp, pt.B.grp, h.map};
    auto pb = pullback(ph, hh);
    PointedObject Q = pt.p.instance == Instance::Ab ? PointedObject::abelian(pb.grp)
                                                    : PointedObject::group(pb.grp);
    PointedMap pp{pt.p.instance, Q, Z, pb.proj2.map};
    PointedMap sp{pt.p.instance, Z, Q, {}};
    for (int z = 0; z < Z.size(); ++z)
        sp.map.push_back(
            pb.index_of(pt.s.map[static_cast<std::size_t>(h.map[static_cast<std::size_t>(z)])], z));
    PointedMap kp{pt.p.instance, X, Q, {}};
    for (int v : k.map) kp.map.push_back(pb.index_of(v, 0));
    out.point = Point{Q, Z, pp, sp};
    out.cospan = Cospan{X, Q, Z, kp, sp};
    return out;
}

} // namespace

PulledBackPoint point_pullback(const Point& pt, const PointedMap& h) {
    auto [X, k] = pointed_kernel(pt.p);
    return pullback_with_leg(pt, h, X, k);
}

bool is_stable_patch(const PatchWitness& w, int test_bound) {
    if (test_bound < w.cospan.B.size())
        fail("BoundTooSmall", "stability bound below |B|");
    Point pt{w.cospan.Y, w.cospan.B, w.p, w.cospan.s};
    for (const auto& Z : test_objects(w.p.instance, test_bound))
        for (const auto& h : enumerate_pointed_maps(Z, w.cospan.B)) {
            auto pulled = pullback_with_leg(pt, h, w.cospan.X, w.cospan.k);
            if (!patch_retraction(pulled.cospan).has_value()) return false;
        }
    return true;
}

Cospan coproduct_cospan(const PointedObject& X, const PointedObject& B) {
    if (X.instance != B.instance) fail("InstanceMismatch", "coproduct across instances");
    if (X.instance == Instance::Grp)
        fail("Unsupported", "coproducts of nonabelian groups are infinite");
    if (X.instance == Instance::Ab) {
        auto prod = direct_product(X.grp, B.grp);
        auto Y = PointedObject::abelian(prod.grp);
        return Cospan{X, Y, B, PointedMap{Instance::Ab, X, Y, prod.inj1.map},
                      PointedMap{Instance::Ab, B, Y, prod.inj2.map}};
    }
    // wedge of pointed sets
    int nx = X.size(), nb = B.size();
    auto Y = PointedObject::pset(nx + nb - 1);
    PointedMap k{Instance::PSet, X, Y, {}};
    for (int x = 0; x < nx; ++x) k.map.push_back(x);
    PointedMap s{Instance::PSet, B, Y, {}};
    for (int b = 0; b < nb; ++b) s.map.push_back(b == 0 ? 0 : nx - 1 + b);
    return Cospan{X, Y, B, std::move(k), std::move(s)};
}

Cospan semidirect_cospan(const GroupAction& a) {
    auto sd = semidirect_product(a);
    auto X = PointedObject::group(a.X);
    auto B = PointedObject::group(a.B);
    auto Y = PointedObject::group(sd.grp);
    return Cospan{X, Y, B, PointedMap{Instance::Grp, X, Y, sd.k.map},
                  PointedMap{Instance::Grp, B, Y, sd.s.map}};
}

} // namespace xmk
