#pragma once

#include "xmodkit/action.hpp"
#include "xmodkit/pointedcat.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace xmk {

/// The three concrete action-systems (I, G, J) over the pointed base
/// categories: group actions over Grp, and pairs with the diagonal G over
/// Ab and over pointed sets.

enum class AInstance { GrpAct, AbPairs, PSetPairs };

Instance base_instance(AInstance a);
std::string ainstance_name(AInstance a);

/// An object of A: an action of I(A) on J(A).  GrpAct carries a genuine
/// GroupAction; the pair instances carry an ordered pair (JA, IA).
struct ActionObject {
    AInstance instance = AInstance::GrpAct;
    GroupAction act;             // GrpAct payload
    PointedObject first, second; // pair payload (first = JA, second = IA)

    void validate() const;
    static ActionObject grp(GroupAction a);
    static ActionObject pair(AInstance ins, PointedObject X, PointedObject B);
};

bool same_action_object(const ActionObject& a, const ActionObject& b);

/// A morphism (f1, f2): A -> A' with f1: JA -> JA', f2: IA -> IA'.
/// In GrpAct, equivariance f1(b.x) = f2(b).f1(x) is required.
struct ActionMorphism {
    ActionObject dom, cod;
    PointedMap f1, f2;

    void validate() const;
    static ActionMorphism identity(const ActionObject& a);
};

ActionMorphism compose(const ActionMorphism& g, const ActionMorphism& f);
bool same_morphism(const ActionMorphism& a, const ActionMorphism& b);

/// All morphisms dom -> cod, in deterministic lexicographic order.
std::vector<ActionMorphism> enumerate_action_morphisms(const ActionObject& dom,
                                                       const ActionObject& cod);

/// All objects of the instance with |JA|, |IA| <= bound.
std::vector<ActionObject> enumerate_action_objects(AInstance ins, int bound);

PointedObject functor_I(const ActionObject& a);
PointedObject functor_J(const ActionObject& a);

/// G(B): conjugation of B on itself in GrpAct; the pair (B, B) otherwise.
ActionObject functor_G(AInstance ins, const PointedObject& b);

/// Value of the left adjoint F together with the coproduct-style legs
/// k: JA -> FA and s: IA -> FA.
struct FValue {
    PointedObject obj;
    PointedMap k, s;
};
FValue functor_F(const ActionObject& a);

/// F on morphisms: F(f): F(dom) -> F(cod).
PointedMap map_F(const ActionMorphism& f);

/// The unit eta_A: A -> GF(A), with components (k, s).
ActionMorphism eta(const ActionObject& a);

/// pi_A: A -> GI(A), the unique morphism with J-component 0, I-component 1.
ActionMorphism pi(const ActionObject& a);

/// For g: A -> G(Y), the composite eps_Y F(g): FA -> Y, i.e. the unique
/// t with t k = g1 and t s = g2.
PointedMap counit_factor(const ActionMorphism& g);

/// The split extension JA -> FA <-> IA of Prop-style point realization.
SplitExtension realize_point(const ActionObject& a);

struct CartesianLift {
    ActionObject E;
    ActionMorphism alpha; // E -> A with I(alpha) = g
};
/// Cartesian lifting of g: B' -> IA along A.
CartesianLift cartesian_lifting(const PointedMap& g, const ActionObject& a);

/// Fast instance characterization of cartesian morphisms.
bool is_cartesian(const ActionMorphism& alpha);
/// Definition-level lifting-property check over all test objects of size
/// <= bound; used to cross-validate the fast path.
bool is_cartesian_exhaustive(const ActionMorphism& alpha, int bound);

/// f: A -> E is organic when JE ~ IE and (J(f), I(f)) is an exact patch.
bool is_organic(const ActionMorphism& f);

struct XmodReport {
    bool ok = true;
    std::string equation; // "8" or "9" on failure
    int b = -1, x = -1, x2 = -1;
};
/// Crossed-module equations (8) and (9), with a witness on failure.
XmodReport xmod_check(const GroupAction& a, const GroupHom& h);

struct CrossedModule {
    GroupAction act;
    GroupHom h; // X -> B
    void validate() const;
};

struct WhiteheadSequence {
    ActionObject A;
    ActionMorphism u; // A -> GI(A)
    ActionMorphism v; // GJ(A) -> A
    void validate() const;
};

/// The Whitehead sequence with u = (h, 1) and v = (1, h); validation
/// enforces the instance's equivariance conditions.
WhiteheadSequence make_whitehead(const ActionObject& a, const PointedMap& h);

WhiteheadSequence xmod_to_whitehead(const CrossedModule& cm);
CrossedModule whitehead_to_xmod(const WhiteheadSequence& w);

/// All (action, h) pairs on (X, B) satisfying (8)-(9), lexicographic.
std::vector<CrossedModule> enumerate_crossed_modules(GroupPtr X, GroupPtr B);

struct LConditionResult {
    // all Whitehead pairs (f', g') with alpha g' = g and f' beta = f
    std::vector<std::pair<ActionMorphism, ActionMorphism>> solutions;
};
/// Exhaustive instantiation of the L-condition for the square
/// (alpha: E -> A, beta: A -> E, f: A -> GIE, g: GJE -> A).
LConditionResult l_condition_instance(const ActionMorphism& alpha, const ActionMorphism& beta,
                                      const ActionMorphism& f, const ActionMorphism& g);

} // namespace xmk
