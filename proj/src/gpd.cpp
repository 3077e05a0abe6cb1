#include "xmodkit/gpd.hpp"

#include "xmodkit/catalog.hpp"
#include "xmodkit/errors.hpp"
#include "xmodkit/simplicial.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace xmk {

namespace {

GroupHom to_hom(const PointedMap& f) {
    if (f.instance == Instance::PSet) fail("InstanceMismatch", "pointed-set map has no group payload");
    return GroupHom{f.dom.grp, f.cod.grp, f.map};
}

bool is_identity(const GroupHom& f) {
    for (std::size_t i = 0; i < f.map.size(); ++i)
        if (f.map[i] != static_cast<int>(i)) return false;
    return true;
}

/// First index where the two maps differ, or -1.
int first_mismatch(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return static_cast<int>(i);
    return -1;
}

} // namespace

PullbackGroup composable_pairs(const GroupHom& d, const GroupHom& c) {
    return pullback(d, c);
}

InternalCategory assemble_category(GroupPtr C0, GroupPtr C1, GroupHom d, GroupHom c, GroupHom e) {
    InternalCategory cat;
    cat.C0 = std::move(C0);
    cat.C1 = std::move(C1);
    cat.d = std::move(d);
    cat.c = std::move(c);
    cat.e = std::move(e);
    cat.C2 = composable_pairs(cat.d, cat.c);
    const int n1 = cat.C1->order();
    cat.e1 = GroupHom{cat.C1, cat.C2.grp, std::vector<int>(static_cast<std::size_t>(n1))};
    cat.e2 = GroupHom{cat.C1, cat.C2.grp, std::vector<int>(static_cast<std::size_t>(n1))};
    for (int f = 0; f < n1; ++f) {
        cat.e1.map[static_cast<std::size_t>(f)] = cat.C2.index_of(f, cat.e(cat.d(f)));
        cat.e2.map[static_cast<std::size_t>(f)] = cat.C2.index_of(cat.e(cat.c(f)), f);
    }
    // composition forced by the unit laws: m(f, g) = f * e(d f)^{-1} * g
    cat.m = GroupHom{cat.C2.grp, cat.C1, std::vector<int>(cat.C2.pairs.size())};
    for (std::size_t t = 0; t < cat.C2.pairs.size(); ++t) {
        auto [f, g] = cat.C2.pairs[t];
        cat.m.map[t] = cat.C1->mul(cat.C1->mul(f, cat.C1->inv(cat.e(cat.d(f)))), g);
    }
    return cat;
}

ComposableTriples composable_triples(const InternalCategory& cat) {
    ComposableTriples t;
    t.via_m = pullback(cat.C2.proj2, cat.m);
    t.via_p = pullback(cat.C2.proj2, cat.C2.proj1);
    t.iso = GroupHom{t.via_m.grp, t.via_p.grp, std::vector<int>(t.via_m.pairs.size())};
    for (std::size_t i = 0; i < t.via_m.pairs.size(); ++i) {
        auto [a, b] = t.via_m.pairs[i];
        // (f, gh) with (g, h) rewrites to ((f, g), (g, h))
        int f = cat.C2.pairs[static_cast<std::size_t>(a)].first;
        int g = cat.C2.pairs[static_cast<std::size_t>(b)].first;
        t.iso.map[i] = t.via_p.index_of(cat.C2.index_of(f, g), b);
    }
    t.q1 = t.via_p.proj1;
    t.q2 = t.via_p.proj2;
    t.m1 = GroupHom{t.via_p.grp, cat.C2.grp, std::vector<int>(t.via_p.pairs.size())};
    t.m2 = GroupHom{t.via_p.grp, cat.C2.grp, std::vector<int>(t.via_p.pairs.size())};
    for (std::size_t i = 0; i < t.via_p.pairs.size(); ++i) {
        auto [a, b] = t.via_p.pairs[i];
        int f = cat.C2.pairs[static_cast<std::size_t>(a)].first;
        int h = cat.C2.pairs[static_cast<std::size_t>(b)].second;
        t.m1.map[i] = cat.C2.index_of(f, cat.m(b));
        t.m2.map[i] = cat.C2.index_of(cat.m(a), h);
    }
    return t;
}

bool CatReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CatCheck& c) { return c.pass; });
}

CatReport is_internal_category(const InternalCategory& cat) {
    CatReport rep;
    auto hom_check = [&](const char* name, const GroupHom& f) {
        CatCheck ck{name, true, -1};
        try {
            f.validate();
        } catch (const Error&) {
            ck.pass = false;
        }
        rep.checks.push_back(ck);
        return ck.pass;
    };
    auto eq_check = [&](const char* name, const std::vector<int>& lhs,
                        const std::vector<int>& rhs) {
        int w = first_mismatch(lhs, rhs);
        rep.checks.push_back(CatCheck{name, w < 0, w});
        return w < 0;
    };
    hom_check("d is a homomorphism", cat.d);
    hom_check("c is a homomorphism", cat.c);
    hom_check("e is a homomorphism", cat.e);
    bool m_hom = hom_check("m is a homomorphism", cat.m);
    eq_check("d e = 1", compose(cat.d, cat.e).map, GroupHom::identity(cat.C0).map);
    eq_check("c e = 1", compose(cat.c, cat.e).map, GroupHom::identity(cat.C0).map);
    eq_check("d p1 = c p2", compose(cat.d, cat.C2.proj1).map, compose(cat.c, cat.C2.proj2).map);
    eq_check("m e1 = 1", compose(cat.m, cat.e1).map, GroupHom::identity(cat.C1).map);
    eq_check("m e2 = 1", compose(cat.m, cat.e2).map, GroupHom::identity(cat.C1).map);
    bool dm = eq_check("d m = d p2", compose(cat.d, cat.m).map, compose(cat.d, cat.C2.proj2).map);
    bool cm = eq_check("c m = c p1", compose(cat.c, cat.m).map, compose(cat.c, cat.C2.proj1).map);
    if (m_hom && dm && cm) {
        auto t = composable_triples(cat);
        eq_check("m m1 = m m2", compose(cat.m, t.m1).map, compose(cat.m, t.m2).map);
    } else {
        // triples are only well defined over compatible boundaries
        rep.checks.push_back(CatCheck{"m m1 = m m2", false, -1});
    }
    return rep;
}

std::optional<GroupoidWitness> is_groupoid(const InternalCategory& cat) {
    const int n1 = cat.C1->order();
    std::vector<int> inv(static_cast<std::size_t>(n1), -1);
    for (int f = 0; f < n1; ++f) {
        for (int i = 0; i < n1; ++i) {
            if (cat.d(i) != cat.c(f) || cat.c(i) != cat.d(f)) continue;
            if (cat.m(cat.C2.index_of(f, i)) != cat.e(cat.c(f))) continue;
            if (cat.m(cat.C2.index_of(i, f)) != cat.e(cat.d(f))) continue;
            inv[static_cast<std::size_t>(f)] = i;
            break;
        }
        if (inv[static_cast<std::size_t>(f)] < 0) return std::nullopt;
    }
    GroupoidWitness w{cat, GroupHom{cat.C1, cat.C1, std::move(inv)}};
    try {
        w.inv.validate();
    } catch (const Error&) {
        return std::nullopt;
    }
    return w;
}

InternalCategory from_whitehead(const WhiteheadSequence& w) {
    w.validate();
    if (w.A.instance == AInstance::PSetPairs)
        fail("InstanceMismatch", "internal categories live over group instances");
    auto t = build_tower(w, 2);
    const ActionObject& a0 = t.levels[0].A;
    auto cat = assemble_category(functor_I(a0).grp, t.levels[0].F->obj.grp,
                                 to_hom(counit_factor(pi(a0))), to_hom(t.alphas[0].f2),
                                 to_hom(t.levels[0].F->s));
    // transport m = I(alpha_2) along theta: FA_1 -> C2, w -> (F(alpha_1) w, pi_1 w)
    auto fa1 = map_F(t.alphas[0]);
    auto pi1 = counit_factor(pi(t.levels[1].A));
    auto ia2 = t.alphas[1].f2;
    const int nfa1 = t.levels[1].F->obj.size();
    if (nfa1 != cat.C2.grp->order())
        fail("WStarFailure", "comparison object has " + std::to_string(nfa1) +
                                 " elements, composable pairs have " +
                                 std::to_string(cat.C2.grp->order()));
    std::vector<int> m_map(cat.C2.pairs.size(), -1);
    for (int x = 0; x < nfa1; ++x) {
        int f = fa1(x), g = pi1(x);
        if (cat.d(f) != cat.c(g))
            fail("WStarFailure", "comparison map misses the pullback at element " +
                                     std::to_string(x));
        int idx = cat.C2.index_of(f, g);
        if (m_map[static_cast<std::size_t>(idx)] >= 0)
            fail("WStarFailure", "comparison map is not injective at element " +
                                     std::to_string(x));
        m_map[static_cast<std::size_t>(idx)] = ia2(x);
    }
    if (m_map != cat.m.map)
        fail("InternalCheckMismatch",
             "transported composition disagrees with the forced composition");
    return cat;
}

bool wstar_check(const WhiteheadSequence& w, int depth) {
    if (depth < 0) fail("BoundExceeded", "negative tower depth");
    if (depth <= 1) return true; // no lifting has both comparison objects materialized
    auto t = build_tower(w, depth);
    for (int i = 1; i < depth; ++i) {
        const auto& E = t.levels[static_cast<std::size_t>(i)];
        const auto& A = t.levels[static_cast<std::size_t>(i) - 1];
        auto f_alpha = map_F(t.alphas[static_cast<std::size_t>(i) - 1]); // FE -> FA
        auto pi_e = counit_factor(pi(E.A));                              // FE -> IE
        auto pi_a = counit_factor(pi(A.A));                              // FA -> IA
        const auto& i_alpha = t.alphas[static_cast<std::size_t>(i) - 1].f2; // IE -> IA
        const int nfe = E.F->obj.size(), nfa = A.F->obj.size();
        const int nie = functor_I(E.A).size(), nia = functor_I(A.A).size();
        // universal property: (F(alpha), pi_E) is a bijection onto the pullback
        std::vector<char> hit(static_cast<std::size_t>(nfa) * static_cast<std::size_t>(nie), 0);
        bool universal = true;
        for (int x = 0; x < nfe && universal; ++x) {
            std::size_t cell = static_cast<std::size_t>(f_alpha(x)) * static_cast<std::size_t>(nie) +
                               static_cast<std::size_t>(pi_e(x));
            if (hit[cell]) universal = false;
            hit[cell] = 1;
        }
        int target = 0;
        for (int a = 0; a < nfa; ++a)
            for (int b = 0; b < nie; ++b) {
                if (pi_a(a) != i_alpha(b)) continue;
                ++target;
                if (!hit[static_cast<std::size_t>(a) * static_cast<std::size_t>(nie) +
                         static_cast<std::size_t>(b)])
                    universal = false;
            }
        universal = universal && target == nfe;
        if (w.A.instance != AInstance::PSetPairs) {
            bool counting = static_cast<long long>(nfe) * nia ==
                            static_cast<long long>(nfa) * nie;
            if (counting != universal)
                fail("InternalCheckMismatch",
                     "pullback counting criterion disagrees with the universal property at "
                     "lifting " + std::to_string(i));
        }
        if (!universal) return false;
    }
    return true;
}

WhiteheadSequence to_whitehead(const GroupoidWitness& g) {
    const InternalCategory& cat = g.cat;
    // witness invariants
    try {
        g.inv.validate();
    } catch (const Error&) {
        fail("NotAGroupoid", "inversion map is not a homomorphism");
    }
    for (int f = 0; f < cat.C1->order(); ++f) {
        int i = g.inv(f);
        if (cat.d(i) != cat.c(f) || cat.c(i) != cat.d(f) ||
            cat.m(cat.C2.index_of(f, i)) != cat.e(cat.c(f)) ||
            cat.m(cat.C2.index_of(i, f)) != cat.e(cat.d(f)))
            fail("NotAGroupoid", "inversion fails at element " + std::to_string(f));
    }

    auto ker = kernel(cat.d);
    const int nx = ker.sub->order();
    std::vector<int> ker_index(static_cast<std::size_t>(cat.C1->order()), -1);
    for (int x = 0; x < nx; ++x) ker_index[static_cast<std::size_t>(ker.inclusion(x))] = x;

    // action of C0 on ker d by b.x = e(b) x e(b)^{-1} inside C1
    GroupAction act;
    act.B = cat.C0;
    act.X = ker.sub;
    act.act.assign(static_cast<std::size_t>(cat.C0->order()),
                   std::vector<int>(static_cast<std::size_t>(nx)));
    for (int b = 0; b < cat.C0->order(); ++b)
        for (int x = 0; x < nx; ++x) {
            int eb = cat.e(b);
            int conj = cat.C1->mul(cat.C1->mul(eb, ker.inclusion(x)), cat.C1->inv(eb));
            int idx = ker_index[static_cast<std::size_t>(conj)];
            if (idx < 0) fail("NotAGroupoid", "conjugation leaves the kernel of d");
            act.act[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)] = idx;
        }
    act.validate();
    GroupHom h = compose(cat.c, ker.inclusion);
    auto xr = xmod_check(act, h);
    if (!xr.ok)
        fail("NotAGroupoid", "recovered data fails crossed-module equation " + xr.equation);

    // literal comparison isomorphism rho, cross-checked against (1, h)
    std::vector<int> rho1(static_cast<std::size_t>(nx)), rho2(static_cast<std::size_t>(nx));
    for (int x = 0; x < nx; ++x) {
        int kx = ker.inclusion(x);
        int r1 = cat.m(cat.C2.index_of(kx, cat.e(cat.d(kx))));
        int r2 = cat.m(cat.C2.index_of(cat.e(cat.c(kx)), kx));
        if (ker_index[static_cast<std::size_t>(r1)] < 0 ||
            ker_index[static_cast<std::size_t>(r2)] < 0)
            fail("RhoMismatch", "comparison composite leaves the kernel of d");
        rho1[static_cast<std::size_t>(x)] = ker_index[static_cast<std::size_t>(r1)];
        rho2[static_cast<std::size_t>(x)] = ker_index[static_cast<std::size_t>(r2)];
    }
    std::vector<int> rho1_inv(static_cast<std::size_t>(nx), -1),
        rho2_inv(static_cast<std::size_t>(nx), -1);
    for (int x = 0; x < nx; ++x) {
        rho1_inv[static_cast<std::size_t>(rho1[static_cast<std::size_t>(x)])] = x;
        rho2_inv[static_cast<std::size_t>(rho2[static_cast<std::size_t>(x)])] = x;
    }
    std::vector<int> v2(static_cast<std::size_t>(nx));
    for (int x = 0; x < nx; ++x) {
        if (rho1_inv[static_cast<std::size_t>(x)] < 0 || rho2_inv[static_cast<std::size_t>(x)] < 0)
            fail("RhoMismatch", "comparison map is not bijective");
        v2[static_cast<std::size_t>(x)] = h(rho2_inv[static_cast<std::size_t>(x)]);
    }
    if (!is_identity(GroupHom{ker.sub, ker.sub, rho1_inv}) || v2 != h.map)
        fail("RhoMismatch", "literal construction of v disagrees with the direct formula");

    return xmod_to_whitehead(CrossedModule{std::move(act), std::move(h)});
}

namespace {

/// Isomorphism pair source -> target commuting with h and the actions.
std::optional<std::pair<GroupHom, GroupHom>> find_xmod_iso(const CrossedModule& a,
                                                           const CrossedModule& b) {
    for (const auto& phi_b : enumerate_isomorphisms(a.act.B, b.act.B))
        for (const auto& phi_x : enumerate_isomorphisms(a.act.X, b.act.X)) {
            if (compose(b.h, phi_x).map != compose(phi_b, a.h).map) continue;
            bool equiv = true;
            for (int bb = 0; bb < a.act.B->order() && equiv; ++bb)
                for (int x = 0; x < a.act.X->order() && equiv; ++x)
                    if (phi_x(a.act.apply(bb, x)) != b.act.apply(phi_b(bb), phi_x(x)))
                        equiv = false;
            if (equiv) return std::make_pair(phi_x, phi_b);
        }
    return std::nullopt;
}

/// Isomorphism pair (phi0, phi1) source -> target commuting with d, c, e, m.
std::optional<std::pair<GroupHom, GroupHom>> find_gpd_iso(const InternalCategory& a,
                                                          const InternalCategory& b) {
    if (a.C0->order() != b.C0->order() || a.C1->order() != b.C1->order() ||
        a.C2.grp->order() != b.C2.grp->order())
        return std::nullopt;
    for (const auto& phi0 : enumerate_isomorphisms(a.C0, b.C0))
        for (const auto& phi1 : enumerate_isomorphisms(a.C1, b.C1)) {
            if (compose(phi0, a.d).map != compose(b.d, phi1).map) continue;
            if (compose(phi0, a.c).map != compose(b.c, phi1).map) continue;
            if (compose(phi1, a.e).map != compose(b.e, phi0).map) continue;
            bool mok = true;
            for (std::size_t t = 0; t < a.C2.pairs.size() && mok; ++t) {
                auto [f, g] = a.C2.pairs[t];
                if (phi1(a.m.map[t]) != b.m(b.C2.index_of(phi1(f), phi1(g)))) mok = false;
            }
            if (mok) return std::make_pair(phi0, phi1);
        }
    return std::nullopt;
}

} // namespace

RoundTripCertificate roundtrip_check(const CrossedModule& cm) {
    cm.validate();
    auto cat = from_whitehead(xmod_to_whitehead(cm));
    auto gw = is_groupoid(cat);
    if (!gw) fail("NotAGroupoid", "constructed category has no inverses");
    auto recovered = whitehead_to_xmod(to_whitehead(*gw));
    auto iso = find_xmod_iso(cm, recovered);
    if (!iso) fail("NoIsomorphismFound", "recovered crossed module is not isomorphic to the source");
    return RoundTripCertificate{std::move(recovered), std::move(*gw), std::move(iso->first),
                                std::move(iso->second)};
}

RoundTripCertificate roundtrip_check_gpd(const GroupoidWitness& g) {
    auto w = to_whitehead(g);
    auto rebuilt = from_whitehead(w);
    auto gw2 = is_groupoid(rebuilt);
    if (!gw2) fail("NotAGroupoid", "rebuilt category has no inverses");
    auto iso = find_gpd_iso(g.cat, gw2->cat);
    if (!iso) fail("NoIsomorphismFound", "rebuilt groupoid is not isomorphic to the source");
    return RoundTripCertificate{whitehead_to_xmod(w), std::move(*gw2), std::move(iso->first),
                                std::move(iso->second)};
}

bool protomodular_diagram_check(const SplitExtension& patch, const GroupHom& h) {
    patch.validate();
    if (patch.point.Y.instance == Instance::PSet)
        fail("InstanceMismatch", "the diagram lives in groups");
    h.validate();
    GroupPtr X = patch.X.grp, Y = patch.point.Y.grp, B = patch.point.B.grp;
    if (!(*h.dom == *X) || !(*h.cod == *B)) fail("DomainMismatch", "h must map X to B");
    const auto& k = patch.k.map;
    const auto& s = patch.point.s.map;

    // X x X -> Y over (x,0) -> k(x), (x,x) -> s(h(x))
    auto xx = direct_product(X, X);
    std::vector<std::pair<int, int>> seeds1;
    for (int x = 0; x < X->order(); ++x) {
        seeds1.emplace_back(xx.pair_index(x, 0), k[static_cast<std::size_t>(x)]);
        seeds1.emplace_back(xx.pair_index(x, x), s[static_cast<std::size_t>(h(x))]);
    }
    if (!forced_group_map(*xx.grp, *Y, seeds1)) return false;

    // Y -> B x B over k(x) -> (h(x), 0), s(b) -> (b, b)
    auto bb = direct_product(B, B);
    std::vector<std::pair<int, int>> seeds2;
    for (int x = 0; x < X->order(); ++x)
        seeds2.emplace_back(k[static_cast<std::size_t>(x)], bb.pair_index(h(x), 0));
    for (int b = 0; b < B->order(); ++b)
        seeds2.emplace_back(s[static_cast<std::size_t>(b)], bb.pair_index(b, b));
    return forced_group_map(*Y, *bb.grp, seeds2).has_value();
}

std::vector<GroupoidWitness> enumerate_internal_groupoids(int max_c1) {
    if (max_c1 < 1 || max_c1 > 8)
        fail("BoundExceeded", "internal-groupoid enumeration is capped at |C1| <= 8");
    // memoized isomorphism lists for the deduplication passes
    std::map<std::pair<const FiniteGroup*, const FiniteGroup*>, std::vector<GroupHom>> iso_cache;
    auto isos = [&](const GroupPtr& a, const GroupPtr& b) -> const std::vector<GroupHom>& {
        auto key = std::make_pair(a.get(), b.get());
        auto it = iso_cache.find(key);
        if (it == iso_cache.end()) it = iso_cache.emplace(key, enumerate_isomorphisms(a, b)).first;
        return it->second;
    };
    auto iso_equivalent = [&](const InternalCategory& a, const InternalCategory& b) {
        if (a.C0.get() != b.C0.get() || a.C1.get() != b.C1.get() ||
            a.C2.grp->order() != b.C2.grp->order())
            return false;
        for (const auto& phi0 : isos(a.C0, b.C0))
            for (const auto& phi1 : isos(a.C1, b.C1)) {
                if (compose(phi0, a.d).map != compose(b.d, phi1).map) continue;
                if (compose(phi0, a.c).map != compose(b.c, phi1).map) continue;
                if (compose(phi1, a.e).map != compose(b.e, phi0).map) continue;
                return true; // m is forced by d, c, e, hence preserved
            }
        return false;
    };

    std::vector<GroupoidWitness> out;
    for (const auto& [name1, c1] : groups_up_to_order(max_c1)) {
        (void)name1;
        for (const auto& [name0, c0] : groups_up_to_order(c1->order())) {
            (void)name0;
            if (c1->order() % c0->order() != 0) continue;
            auto down = enumerate_homs(c1, c0);
            for (const auto& e : enumerate_homs(c0, c1)) {
                std::vector<const GroupHom*> retractions;
                for (const auto& r : down)
                    if (is_identity(compose(r, e))) retractions.push_back(&r);
                for (const GroupHom* d : retractions)
                    for (const GroupHom* c : retractions) {
                        auto cat = assemble_category(c0, c1, *d, *c, e);
                        if (!is_internal_category(cat).ok()) continue;
                        auto gw = is_groupoid(cat);
                        if (!gw) continue;
                        bool fresh = std::none_of(out.begin(), out.end(),
                                                  [&](const GroupoidWitness& kept) {
                                                      return iso_equivalent(kept.cat, cat);
                                                  });
                        if (fresh) out.push_back(std::move(*gw));
                    }
            }
        }
    }
    return out;
}

} // namespace xmk
