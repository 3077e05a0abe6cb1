#include "xmodkit/actionsys.hpp"

#include "xmodkit/catalog.hpp"
#include "xmodkit/errors.hpp"

#include <algorithm>

namespace xmk {

Instance base_instance(AInstance a) {
    switch (a) {
        case AInstance::GrpAct: return Instance::Grp;
        case AInstance::AbPairs: return Instance::Ab;
        case AInstance::PSetPairs: return Instance::PSet;
    }
    return Instance::Grp;
}

std::string ainstance_name(AInstance a) {
    switch (a) {
        case AInstance::GrpAct: return "grpact";
        case AInstance::AbPairs: return "abpairs";
        case AInstance::PSetPairs: return "psetpairs";
    }
    return "?";
}

void ActionObject::validate() const {
    if (instance == AInstance::GrpAct) {
        act.validate();
        return;
    }
    first.validate();
    second.validate();
    Instance want = base_instance(instance);
    if (first.instance != want || second.instance != want)
        fail("InstanceMismatch", "pair components from the wrong base instance");
}

ActionObject ActionObject::grp(GroupAction a) {
    ActionObject o;
    o.instance = AInstance::GrpAct;
    o.act = std::move(a);
    o.act.validate();
    return o;
}

ActionObject ActionObject::pair(AInstance ins, PointedObject X, PointedObject B) {
    ActionObject o;
    o.instance = ins;
    o.first = std::move(X);
    o.second = std::move(B);
    o.validate();
    return o;
}

bool same_action_object(const ActionObject& a, const ActionObject& b) {
    if (a.instance != b.instance) return false;
    if (a.instance == AInstance::GrpAct) return a.act == b.act;
    return same_object(a.first, b.first) && same_object(a.second, b.second);
}

PointedObject functor_I(const ActionObject& a) {
    if (a.instance == AInstance::GrpAct) return PointedObject::group(a.act.B);
    return a.second;
}

PointedObject functor_J(const ActionObject& a) {
    if (a.instance == AInstance::GrpAct) return PointedObject::group(a.act.X);
    return a.first;
}

ActionObject functor_G(AInstance ins, const PointedObject& b) {
    if (ins == AInstance::GrpAct) return ActionObject::grp(GroupAction::conjugation(b.grp));
    return ActionObject::pair(ins, b, b);
}

void ActionMorphism::validate() const {
    f1.validate();
    f2.validate();
    if (!same_object(f1.dom, functor_J(dom)) || !same_object(f1.cod, functor_J(cod)) ||
        !same_object(f2.dom, functor_I(dom)) || !same_object(f2.cod, functor_I(cod)))
        fail("InvalidMorphism", "components do not match the stated endpoints");
    if (dom.instance != cod.instance) fail("InstanceMismatch", "morphism across instances");
    if (dom.instance == AInstance::GrpAct) {
        const GroupAction& da = dom.act;
        const GroupAction& ca = cod.act;
        for (int b = 0; b < da.B->order(); ++b)
            for (int x = 0; x < da.X->order(); ++x)
                if (f1(da.act[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)]) !=
                    ca.act[static_cast<std::size_t>(f2(b))][static_cast<std::size_t>(f1(x))])
                    fail("NotEquivariant", "f1(b.x) != f2(b).f1(x) at b=" + std::to_string(b) +
                                               ", x=" + std::to_string(x));
    }
}

ActionMorphism ActionMorphism::identity(const ActionObject& a) {
    return ActionMorphism{a, a, PointedMap::identity(functor_J(a)),
                          PointedMap::identity(functor_I(a))};
}

ActionMorphism compose(const ActionMorphism& g, const ActionMorphism& f) {
    if (!same_action_object(f.cod, g.dom)) fail("CodomainMismatch", "compose: cod(f) != dom(g)");
    return ActionMorphism{f.dom, g.cod, compose(g.f1, f.f1), compose(g.f2, f.f2)};
}

bool same_morphism(const ActionMorphism& a, const ActionMorphism& b) {
    return same_action_object(a.dom, b.dom) && same_action_object(a.cod, b.cod) &&
           a.f1.map == b.f1.map && a.f2.map == b.f2.map;
}

std::vector<ActionMorphism> enumerate_action_morphisms(const ActionObject& dom,
                                                       const ActionObject& cod) {
    std::vector<ActionMorphism> out;
    auto f1s = enumerate_pointed_maps(functor_J(dom), functor_J(cod));
    auto f2s = enumerate_pointed_maps(functor_I(dom), functor_I(cod));
    for (const auto& f1 : f1s)
        for (const auto& f2 : f2s) {
            if (dom.instance == AInstance::GrpAct) {
                const GroupAction& da = dom.act;
                const GroupAction& ca = cod.act;
                bool ok = true;
                for (int b = 0; b < da.B->order() && ok; ++b)
                    for (int x = 0; x < da.X->order() && ok; ++x)
                        if (f1(da.act[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)]) !=
                            ca.act[static_cast<std::size_t>(f2(b))][static_cast<std::size_t>(f1(x))])
                            ok = false;
                if (!ok) continue;
            }
            out.push_back(ActionMorphism{dom, cod, f1, f2});
        }
    return out;
}

std::vector<ActionObject> enumerate_action_objects(AInstance ins, int bound) {
    std::vector<ActionObject> out;
    if (ins == AInstance::GrpAct) {
        for (auto& [bn, b] : groups_up_to_order(bound))
            for (auto& [xn, x] : groups_up_to_order(bound))
                for (auto& a : enumerate_actions(b, x)) out.push_back(ActionObject::grp(a));
        return out;
    }
    auto objs = test_objects(base_instance(ins), bound);
    for (const auto& x : objs)
        for (const auto& b : objs) out.push_back(ActionObject::pair(ins, x, b));
    return out;
}

FValue functor_F(const ActionObject& a) {
    if (a.instance == AInstance::GrpAct) {
        auto sd = semidirect_product(a.act);
        auto fa = PointedObject::group(sd.grp);
        return FValue{fa,
                      PointedMap{Instance::Grp, PointedObject::group(a.act.X), fa, sd.k.map},
                      PointedMap{Instance::Grp, PointedObject::group(a.act.B), fa, sd.s.map}};
    }
    auto c = coproduct_cospan(a.first, a.second);
    return FValue{c.Y, c.k, c.s};
}

PointedMap map_F(const ActionMorphism& f) {
    auto fd = functor_F(f.dom);
    auto fc = functor_F(f.cod);
    PointedMap out{fd.obj.instance, fd.obj, fc.obj,
                   std::vector<int>(static_cast<std::size_t>(fd.obj.size()), -1)};
    for (int x = 0; x < f.f1.dom.size(); ++x)
        out.map[static_cast<std::size_t>(fd.k(x))] = fc.k(f.f1(x));
    for (int b = 0; b < f.f2.dom.size(); ++b)
        out.map[static_cast<std::size_t>(fd.s(b))] = fc.s(f.f2(b));
    if (f.dom.instance != AInstance::PSetPairs) {
        // pairs (x, b) with index x*|B| + b map to (f1(x), f2(b))
        int nb = f.f2.dom.size(), nb2 = f.f2.cod.size();
        for (int x = 0; x < f.f1.dom.size(); ++x)
            for (int b = 0; b < nb; ++b)
                out.map[static_cast<std::size_t>(x * nb + b)] = f.f1(x) * nb2 + f.f2(b);
    }
    return out;
}

ActionMorphism eta(const ActionObject& a) {
    auto fv = functor_F(a);
    return ActionMorphism{a, functor_G(a.instance, fv.obj), fv.k, fv.s};
}

ActionMorphism pi(const ActionObject& a) {
    auto ia = functor_I(a);
    return ActionMorphism{a, functor_G(a.instance, ia), PointedMap::zero(functor_J(a), ia),
                          PointedMap::identity(ia)};
}

PointedMap counit_factor(const ActionMorphism& g) {
    auto fv = functor_F(g.dom);
    const PointedObject& y = functor_I(g.cod);
    PointedMap t{fv.obj.instance, fv.obj, y,
                 std::vector<int>(static_cast<std::size_t>(fv.obj.size()), 0)};
    if (g.dom.instance == AInstance::PSetPairs) {
        for (int x = 0; x < g.f1.dom.size(); ++x)
            t.map[static_cast<std::size_t>(fv.k(x))] = g.f1(x);
        for (int b = 0; b < g.f2.dom.size(); ++b)
            t.map[static_cast<std::size_t>(fv.s(b))] = g.f2(b);
        return t;
    }
    int nb = g.f2.dom.size();
    for (int x = 0; x < g.f1.dom.size(); ++x)
        for (int b = 0; b < nb; ++b)
            t.map[static_cast<std::size_t>(x * nb + b)] = y.grp->mul(g.f1(x), g.f2(b));
    return t;
}

SplitExtension realize_point(const ActionObject& a) {
    auto fv = functor_F(a);
    auto p = counit_factor(pi(a));
    SplitExtension ext{Point{fv.obj, functor_I(a), p, fv.s}, functor_J(a), fv.k};
    return ext;
}

CartesianLift cartesian_lifting(const PointedMap& g, const ActionObject& a) {
    if (!same_object(g.cod, functor_I(a)))
        fail("CodomainMismatch", "lifting must target I(A)");
    CartesianLift out;
    if (a.instance == AInstance::GrpAct) {
        GroupAction e{g.dom.grp, a.act.X, {}};
        e.act.reserve(static_cast<std::size_t>(g.dom.size()));
        for (int b = 0; b < g.dom.size(); ++b)
            e.act.push_back(a.act.act[static_cast<std::size_t>(g(b))]);
        out.E = ActionObject::grp(std::move(e));
    } else {
        out.E = ActionObject::pair(a.instance, a.first, g.dom);
    }
    out.alpha = ActionMorphism{out.E, a, PointedMap::identity(functor_J(a)), g};
    return out;
}

bool is_cartesian(const ActionMorphism& alpha) {
    if (!alpha.f1.is_bijective()) return false;
    if (alpha.dom.instance != AInstance::GrpAct) return true;
    // the domain action must be the pullback of the codomain action
    const GroupAction& e = alpha.dom.act;
    const GroupAction& a = alpha.cod.act;
    std::vector<int> inv(alpha.f1.map.size());
    for (std::size_t i = 0; i < alpha.f1.map.size(); ++i)
        inv[static_cast<std::size_t>(alpha.f1.map[i])] = static_cast<int>(i);
    for (int b = 0; b < e.B->order(); ++b)
        for (int x = 0; x < e.X->order(); ++x)
            if (e.act[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)] !=
                inv[static_cast<std::size_t>(
                    a.act[static_cast<std::size_t>(alpha.f2(b))]
                         [static_cast<std::size_t>(alpha.f1(x))])])
                return false;
    return true;
}

bool is_cartesian_exhaustive(const ActionMorphism& alpha, int bound) {
    auto ie = functor_I(alpha.dom);
    for (const auto& w : enumerate_action_objects(alpha.dom.instance, bound))
        for (const auto& g : enumerate_action_morphisms(w, alpha.cod))
            for (const auto& h : enumerate_pointed_maps(functor_I(w), ie)) {
                if (compose(alpha.f2, h).map != g.f2.map) continue;
                int count = 0;
                for (const auto& u : enumerate_action_morphisms(w, alpha.dom)) {
                    if (u.f2.map != h.map) continue;
                    if (same_morphism(compose(alpha, u), g)) ++count;
                }
                if (count != 1) return false;
            }
    return true;
}

bool is_organic(const ActionMorphism& f) {
    auto je = functor_J(f.cod);
    auto ie = functor_I(f.cod);
    auto ja = functor_J(f.dom);
    auto ia = functor_I(f.dom);
    if (je.size() != ie.size()) return false;
    if (f.dom.instance == AInstance::PSetPairs) {
        // a bijection JE -> IE matching the legs into an exact patch exists
        // iff both legs are injective and their images tile IE minus overlap
        // at the basepoint
        auto inj = [](const std::vector<int>& m) {
            std::vector<int> v(m);
            std::sort(v.begin(), v.end());
            return std::adjacent_find(v.begin(), v.end()) == v.end();
        };
        if (!inj(f.f1.map) || !inj(f.f2.map)) return false;
        return static_cast<int>(f.f1.map.size() + f.f2.map.size()) == ie.size() + 1;
    }
    for (const auto& phi : enumerate_isomorphisms(je.grp, ie.grp)) {
        PointedMap pm{ie.instance, je, ie, phi.map};
        Cospan c{ja, ie, ia, compose(pm, f.f1), f.f2};
        auto p = patch_retraction(c);
        if (!p) continue;
        PatchWitness w{c, *p};
        if (is_exact_patch(w)) return true;
    }
    return false;
}

XmodReport xmod_check(const GroupAction& a, const GroupHom& h) {
    const FiniteGroup& X = *a.X;
    const FiniteGroup& B = *a.B;
    for (int b = 0; b < B.order(); ++b)
        for (int x = 0; x < X.order(); ++x)
            if (h.map[static_cast<std::size_t>(
                    a.act[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])] !=
                B.mul(B.mul(b, h.map[static_cast<std::size_t>(x)]), B.inv(b)))
                return XmodReport{false, "8", b, x, -1};
    for (int x = 0; x < X.order(); ++x)
        for (int x2 = 0; x2 < X.order(); ++x2)
            if (a.act[static_cast<std::size_t>(h.map[static_cast<std::size_t>(x)])]
                     [static_cast<std::size_t>(x2)] != X.mul(X.mul(x, x2), X.inv(x)))
                return XmodReport{false, "9", -1, x, x2};
    return XmodReport{};
}

void CrossedModule::validate() const {
    act.validate();
    h.validate();
    if (!h.dom->same_table(*act.X) || !h.cod->same_table(*act.B))
        fail("InvalidMap", "h must go from X to B");
    auto r = xmod_check(act, h);
    if (!r.ok) fail("NotACrossedModule", "equation (" + r.equation + ") fails");
}

void WhiteheadSequence::validate() const {
    u.validate();
    v.validate();
    if (!same_action_object(u.dom, A) || !same_action_object(v.cod, A))
        fail("InvalidSequence", "u, v endpoints mismatch");
    if (!same_action_object(u.cod, functor_G(A.instance, functor_I(A))) ||
        !same_action_object(v.dom, functor_G(A.instance, functor_J(A))))
        fail("InvalidSequence", "u, v must target/come from G-images");
    if (u.f2.map != PointedMap::identity(functor_I(A)).map)
        fail("InvalidSequence", "I(u) != 1");
    if (v.f1.map != PointedMap::identity(functor_J(A)).map)
        fail("InvalidSequence", "J(v) != 1");
    if (v.f2.map != u.f1.map) fail("InvalidSequence", "I(v) != J(u)");
}

WhiteheadSequence make_whitehead(const ActionObject& a, const PointedMap& h) {
    auto ja = functor_J(a);
    auto ia = functor_I(a);
    WhiteheadSequence w{
        a,
        ActionMorphism{a, functor_G(a.instance, ia), h, PointedMap::identity(ia)},
        ActionMorphism{functor_G(a.instance, ja), a, PointedMap::identity(ja), h}};
    w.validate();
    return w;
}

WhiteheadSequence xmod_to_whitehead(const CrossedModule& cm) {
    cm.validate();
    auto a = ActionObject::grp(cm.act);
    return make_whitehead(
        a, PointedMap{Instance::Grp, functor_J(a), functor_I(a), cm.h.map});
}

CrossedModule whitehead_to_xmod(const WhiteheadSequence& w) {
    if (w.A.instance != AInstance::GrpAct)
        fail("InstanceMismatch", "crossed modules live in the group-action instance");
    w.validate();
    CrossedModule cm{w.A.act, GroupHom{w.A.act.X, w.A.act.B, w.u.f1.map}};
    cm.validate();
    return cm;
}

std::vector<CrossedModule> enumerate_crossed_modules(GroupPtr X, GroupPtr B) {
    if (X->order() * B->order() > 256) fail("BoundExceeded", "crossed-module search too large");
    std::vector<CrossedModule> out;
    for (const auto& a : enumerate_actions(B, X))
        for (const auto& h : enumerate_homs(X, B))
            if (xmod_check(a, h).ok) out.push_back(CrossedModule{a, h});
    return out;
}

LConditionResult l_condition_instance(const ActionMorphism& alpha, const ActionMorphism& beta,
                                      const ActionMorphism& f, const ActionMorphism& g) {
    const ActionObject& E = alpha.dom;
    const ActionObject& A = alpha.cod;
    auto gie = functor_G(E.instance, functor_I(E));
    auto gje = functor_G(E.instance, functor_J(E));
    if (!same_action_object(beta.dom, A) || !same_action_object(beta.cod, E))
        fail("PreconditionFailed", "beta must section alpha");
    if (!same_action_object(f.dom, A) || !same_action_object(f.cod, gie))
        fail("PreconditionFailed", "f must go A -> GIE");
    if (!same_action_object(g.dom, gje) || !same_action_object(g.cod, A))
        fail("PreconditionFailed", "g must go GJE -> A");
    if (beta.f2.map != f.f2.map) fail("PreconditionFailed", "I(beta) != I(f)");
    if (alpha.f1.map != g.f1.map) fail("PreconditionFailed", "J(alpha) != J(g)");
    if (compose(alpha.f2, f.f1).map != compose(g.f2, beta.f1).map)
        fail("PreconditionFailed", "I(alpha)J(f) != I(g)J(beta)");
    if (!same_morphism(compose(alpha, beta), ActionMorphism::identity(A)))
        fail("PreconditionFailed", "alpha beta != 1");
    if (!is_cartesian(alpha)) fail("PreconditionFailed", "alpha is not cartesian");
    if (!is_organic(f)) fail("PreconditionFailed", "f is not organic");

    // Only morphisms whose second component is the identity can solve
    // either side, so enumerate the first components directly; the full
    // morphism spaces are far too large at tower sizes.
    auto id_i = PointedMap::identity(functor_I(E));
    auto id_j = PointedMap::identity(functor_J(E));
    std::vector<ActionMorphism> fps;
    for (const auto& m : enumerate_pointed_maps(functor_J(E), functor_J(gie))) {
        ActionMorphism fp{E, gie, m, id_i};
        try {
            fp.validate();
        } catch (const Error&) {
            continue;
        }
        if (!same_morphism(compose(fp, beta), f)) continue;
        fps.push_back(std::move(fp));
    }
    LConditionResult out;
    for (const auto& m : enumerate_pointed_maps(functor_I(gje), functor_I(E))) {
        ActionMorphism gp{gje, E, id_j, m};
        try {
            gp.validate();
        } catch (const Error&) {
            continue;
        }
        if (!same_morphism(compose(alpha, gp), g)) continue;
        for (const auto& fp : fps)
            if (gp.f2.map == fp.f1.map) out.solutions.emplace_back(fp, gp);
    }
    return out;
}

} // namespace xmk
