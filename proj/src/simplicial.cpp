#include "xmodkit/simplicial.hpp"

#include "xmodkit/errors.hpp"

#include <algorithm>

namespace xmk {

namespace {

/// G on morphisms: (t, t) between the G-images.
ActionMorphism map_G(AInstance ins, const PointedMap& t) {
    return ActionMorphism{functor_G(ins, t.dom), functor_G(ins, t.cod), t, t};
}

PointedMap inverse_pointed(const PointedMap& f) {
    PointedMap out{f.instance, f.cod, f.dom, std::vector<int>(f.map.size())};
    for (std::size_t i = 0; i < f.map.size(); ++i)
        out.map[static_cast<std::size_t>(f.map[i])] = static_cast<int>(i);
    return out;
}

} // namespace

ActionMorphism factor_through_cartesian(const ActionMorphism& alpha, const ActionMorphism& w,
                                        const PointedMap& base) {
    if (!alpha.f1.is_bijective())
        fail("FactorizationFailure", "alpha has no invertible J-component");
    ActionMorphism u{w.dom, alpha.dom, compose(inverse_pointed(alpha.f1), w.f1), base};
    try {
        u.validate();
    } catch (const Error&) {
        fail("FactorizationFailure", "candidate factorization is not a morphism");
    }
    if (!same_morphism(compose(alpha, u), w))
        fail("FactorizationFailure", "factorization does not commute");
    return u;
}

CartesianTower build_tower(const WhiteheadSequence& w, int depth, bool via_search) {
    if (depth < 1) fail("BoundExceeded", "tower depth must be at least 1");
    w.validate();
    CartesianTower t;
    t.levels.push_back(TowerLevel{w.A, functor_F(w.A), w});
    for (int i = 0; i < depth; ++i) {
        TowerLevel& cur = t.levels.back();
        const ActionObject& a = cur.A;
        auto lift = cartesian_lifting(counit_factor(cur.wh.u), a);
        ActionMorphism beta{a, lift.E, PointedMap::identity(functor_J(a)), cur.F->s};
        try {
            beta.validate();
        } catch (const Error&) {
            fail("LConditionFailure", "section of the lifted split epi is not a morphism");
        }
        if (!is_cartesian(lift.alpha)) fail("LConditionFailure", "lifted morphism not cartesian");
        if (!same_morphism(compose(lift.alpha, beta), ActionMorphism::identity(a)))
            fail("LConditionFailure", "alpha beta != 1");

        WhiteheadSequence next = [&] {
            if (via_search) {
                auto res = l_condition_instance(lift.alpha, beta, eta(a), cur.wh.v);
                if (res.solutions.size() != 1)
                    fail("LConditionFailure",
                         "expected one (mu, nu), found " + std::to_string(res.solutions.size()));
                return WhiteheadSequence{lift.E, res.solutions[0].first, res.solutions[0].second};
            }
            // forced closed form: mu_{i+1} beta = eta and I(mu_{i+1}) = 1
            // leave mu_{i+1} = (J(eta_{A_i}), 1)
            try {
                return make_whitehead(lift.E, cur.F->k);
            } catch (const Error&) {
                fail("LConditionFailure", "forced (mu, nu) is not a Whitehead sequence");
            }
        }();

        // determining equations of the iterated construction
        if (beta.f2.map != cur.F->s.map) fail("LConditionFailure", "I(beta) != I(eta)");
        if (compose(lift.alpha.f2, cur.F->s).map !=
            PointedMap::identity(functor_I(a)).map)
            fail("LConditionFailure", "I(alpha_{i+1}) I(eta_{A_i}) != 1");
        // GI(alpha_{i+1}) eta_{A_i} beta_i = eta_{A_{i-1}}
        if (i > 0) {
            auto lhs = compose(map_G(a.instance, lift.alpha.f2),
                               compose(eta(a), t.betas.back()));
            auto rhs = eta(t.levels[static_cast<std::size_t>(i) - 1].A);
            if (!same_morphism(lhs, rhs))
                fail("LConditionFailure", "GI(alpha) eta beta != eta at level " +
                                              std::to_string(i));
        } else {
            // GI(alpha_1) eta_A = u
            if (!same_morphism(compose(map_G(a.instance, lift.alpha.f2), eta(a)), w.u))
                fail("LConditionFailure", "GI(alpha_1) eta != u");
        }

        t.alphas.push_back(lift.alpha);
        t.betas.push_back(beta);
        bool last = i + 1 == depth;
        t.levels.push_back(TowerLevel{
            lift.E, last ? std::optional<FValue>{} : std::optional<FValue>{functor_F(lift.E)},
            next});
    }
    return t;
}

PointedMap derived_face(const CartesianTower& t, int n, int i) {
    if (n < 1 || n > t.depth() || i < 0 || i > std::min(n, 3))
        fail("BoundExceeded", "face out of range");
    const auto& lv = t.levels;
    switch (i) {
        case 0: return counit_factor(pi(lv[static_cast<std::size_t>(n) - 1].A));
        case 1: return t.alphas[static_cast<std::size_t>(n) - 1].f2;
        case 2: return map_F(t.alphas[static_cast<std::size_t>(n) - 2]);
        default: {
            // F^2(alpha_{n-2}) = F(F(alpha_{n-2})^*)
            const auto& a_lo = t.alphas[static_cast<std::size_t>(n) - 3]; // alpha_{n-2}
            const auto& a_hi = t.alphas[static_cast<std::size_t>(n) - 2]; // alpha_{n-1}
            auto star = factor_through_cartesian(a_lo, compose(a_lo, a_hi), map_F(a_lo));
            return map_F(star);
        }
    }
}

PointedMap derived_degeneracy(const CartesianTower& t, int n, int i) {
    if (n < 0 || n >= t.depth() || i < 0 || i > std::min(n, 2))
        fail("BoundExceeded", "degeneracy out of range");
    switch (i) {
        case 0: {
            const auto& f = t.levels[static_cast<std::size_t>(n)].F;
            if (!f) fail("BoundExceeded", "F not materialized at this level");
            return f->s;
        }
        case 1: return map_F(t.betas[static_cast<std::size_t>(n) - 1]);
        default: {
            // F^2(beta_{n-1}): alpha_n F(beta_{n-1})^* = 1, I(..) = F(beta)
            const auto& a = t.alphas[static_cast<std::size_t>(n) - 1]; // alpha_n
            const auto& b = t.betas[static_cast<std::size_t>(n) - 2];  // beta_{n-1}
            auto star = factor_through_cartesian(
                a, ActionMorphism::identity(t.levels[static_cast<std::size_t>(n) - 1].A),
                map_F(b));
            return map_F(star);
        }
    }
}

SimplicialTruncation build_truncation(const CartesianTower& t) {
    if (t.depth() < 3) fail("BoundExceeded", "truncation needs a depth-3 tower");
    SimplicialTruncation out;
    out.objects.push_back(functor_I(t.levels[0].A));
    for (int n = 0; n < 3; ++n) out.objects.push_back(t.levels[static_cast<std::size_t>(n)].F->obj);
    for (int n = 1; n <= 3; ++n) {
        std::vector<PointedMap> fs;
        for (int i = 0; i <= n; ++i) fs.push_back(derived_face(t, n, i));
        out.faces.push_back(std::move(fs));
    }
    for (int n = 0; n <= 2; ++n) {
        std::vector<PointedMap> ss;
        for (int i = 0; i <= n; ++i) ss.push_back(derived_degeneracy(t, n, i));
        out.degens.push_back(std::move(ss));
    }
    return out;
}

bool IdentityReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return c.pass; });
}

namespace {

IdentityCheck check_equal(std::string name, const PointedMap& lhs, const PointedMap& rhs,
                          int row = 0) {
    IdentityCheck c{std::move(name), true, -1, row};
    for (std::size_t i = 0; i < lhs.map.size(); ++i)
        if (lhs.map[i] != rhs.map[i]) {
            c.pass = false;
            c.witness = static_cast<int>(i);
            break;
        }
    if (lhs.map.size() != rhs.map.size()) c.pass = false;
    return c;
}

} // namespace

IdentityReport verify_identities(const SimplicialTruncation& t) {
    IdentityReport rep;
    auto d = [&](int n, int i) -> const PointedMap& {
        return t.faces[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(i)];
    };
    auto s = [&](int n, int i) -> const PointedMap& {
        return t.degens[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    };
    auto tag = [](int n, int i, int j, const char* kind) {
        return std::string(kind) + std::to_string(i) + " " + kind + std::to_string(j) +
               " (level " + std::to_string(n) + ")";
    };

    // d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= 3; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                rep.checks.push_back(check_equal("d" + std::to_string(i) + " d" +
                                                     std::to_string(j) + " = d" +
                                                     std::to_string(j - 1) + " d" +
                                                     std::to_string(i) + " (level " +
                                                     std::to_string(n) + ")",
                                                 compose(d(n - 1, i), d(n, j)),
                                                 compose(d(n - 1, j - 1), d(n, i))));

    // s_i s_j = s_{j+1} s_i for i <= j (composite B_n -> B_{n+2})
    for (int n = 0; n <= 1; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                rep.checks.push_back(check_equal("s" + std::to_string(i) + " s" +
                                                     std::to_string(j) + " = s" +
                                                     std::to_string(j + 1) + " s" +
                                                     std::to_string(i) + " (level " +
                                                     std::to_string(n) + ")",
                                                 compose(s(n + 1, i), s(n, j)),
                                                 compose(s(n + 1, j + 1), s(n, i))));

    // d_i s_j relations (composite B_n -> B_n)
    for (int n = 0; n <= 2; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                auto lhs = compose(d(n + 1, i), s(n, j));
                std::string name = "d" + std::to_string(i) + " s" + std::to_string(j) +
                                   " (level " + std::to_string(n) + ")";
                if (i == j || i == j + 1) {
                    rep.checks.push_back(check_equal(name + " = 1", lhs,
                                                     PointedMap::identity(lhs.dom)));
                } else if (i < j) {
                    rep.checks.push_back(
                        check_equal(name + " = s" + std::to_string(j - 1) + " d" +
                                        std::to_string(i),
                                    lhs, compose(s(n - 1, j - 1), d(n, i))));
                } else {
                    rep.checks.push_back(
                        check_equal(name + " = s" + std::to_string(j) + " d" +
                                        std::to_string(i - 1),
                                    lhs, compose(s(n - 1, j), d(n, i - 1))));
                }
            }

    // the twelve named translation rows
    auto one = [&](const PointedMap& m) { return PointedMap::identity(m.dom); };
    auto row = [&](int r, std::string name, const PointedMap& lhs, const PointedMap& rhs) {
        rep.checks.push_back(check_equal("row " + std::to_string(r) + ": " + std::move(name),
                                         lhs, rhs, r));
    };
    row(1, "de = 1", compose(d(1, 0), s(0, 0)), one(s(0, 0)));
    row(2, "ce = 1", compose(d(1, 1), s(0, 0)), one(s(0, 0)));
    row(3, "p2 e2 = 1", compose(d(2, 0), s(1, 0)), one(s(1, 0)));
    row(4, "m e2 = 1", compose(d(2, 1), s(1, 0)), one(s(1, 0)));
    row(5, "m e1 = 1", compose(d(2, 1), s(1, 1)), one(s(1, 1)));
    row(6, "p1 e1 = 1", compose(d(2, 2), s(1, 1)), one(s(1, 1)));
    row(7, "c p2 = d p1", compose(d(1, 1), d(2, 0)), compose(d(1, 0), d(2, 2)));
    row(8, "d p2 = d m", compose(d(1, 0), d(2, 0)), compose(d(1, 0), d(2, 1)));
    row(9, "c p1 = c m", compose(d(1, 1), d(2, 2)), compose(d(1, 1), d(2, 1)));
    row(10, "p2 e1 = e d", compose(d(2, 0), s(1, 1)), compose(s(0, 0), d(1, 0)));
    row(11, "p1 e2 = e c", compose(d(2, 2), s(1, 0)), compose(s(0, 0), d(1, 1)));
    row(12, "m m1 = m m2", compose(d(2, 1), d(3, 2)), compose(d(2, 1), d(3, 1)));
    return rep;
}

} // namespace xmk
