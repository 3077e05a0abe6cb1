#pragma once

#include "xmodkit/actionsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xmk {

/// The infinite sequence of cartesian split epimorphisms induced by a
/// Whitehead sequence, materialized up to a finite depth, and the level-3
/// simplicial truncation it induces in the base category.

struct TowerLevel {
    ActionObject A;
    std::optional<FValue> F; // F(A_i) with its legs; omitted at the top level
    WhiteheadSequence wh;    // (A_i, mu_i, nu_i); level 0 is the input
};

struct CartesianTower {
    std::vector<TowerLevel> levels;     // A_0 .. A_depth
    std::vector<ActionMorphism> alphas; // alphas[i]: A_{i+1} -> A_i
    std::vector<ActionMorphism> betas;  // betas[i]: A_i -> A_{i+1}
    int depth() const { return static_cast<int>(alphas.size()); }
};

/// Iterate the induced-Whitehead-sequence construction depth times.  Each
/// level's (mu, nu) comes from the forced closed form; with via_search the
/// pair is instead found by exhaustive L-condition search (small orders
/// only).  A missing or invalid forced pair raises LConditionFailure.
CartesianTower build_tower(const WhiteheadSequence& w, int depth, bool via_search = false);

/// The unique u: W -> E with alpha u = w and I(u) = base, for cartesian
/// alpha: E -> A.  Raises FactorizationFailure when no such morphism exists.
ActionMorphism factor_through_cartesian(const ActionMorphism& alpha, const ActionMorphism& w,
                                        const PointedMap& base);

/// Face d_i: B_n -> B_{n-1} of the induced simplicial object, i.e.
/// (pi_{n-1}, I(alpha_n), F(alpha_{n-1}), F^2(alpha_{n-2}))[i].
PointedMap derived_face(const CartesianTower& t, int n, int i);

/// Degeneracy s_i: B_n -> B_{n+1}, i.e.
/// (iota_n, F(beta_n), F^2(beta_{n-1}))[i].
PointedMap derived_degeneracy(const CartesianTower& t, int n, int i);

struct SimplicialTruncation {
    std::vector<PointedObject> objects;          // B_0 = IA_0, B_n = FA_{n-1}
    std::vector<std::vector<PointedMap>> faces;  // faces[n-1][i]: B_n -> B_{n-1}
    std::vector<std::vector<PointedMap>> degens; // degens[n][i]:  B_n -> B_{n+1}
};

/// The level-3 truncated simplicial object of a depth-3 tower.
SimplicialTruncation build_truncation(const CartesianTower& t);

struct IdentityCheck {
    std::string name;
    bool pass = true;
    int witness = -1;   // element of the common domain on failure
    int table1_row = 0; // 1..12 for the named translation rows
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const;
};

/// Elementwise check of every simplicial identity expressible in the
/// truncation, plus the twelve named translation rows.
IdentityReport verify_identities(const SimplicialTruncation& t);

} // namespace xmk
