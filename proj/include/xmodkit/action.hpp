#pragma once

#include "xmodkit/fingroup.hpp"

namespace xmk {

/// Action of a group B on a group X by automorphisms, stored as a
/// left-action table: act[b][x] = b.x with act[bb'][x] = act[b][act[b'][x]].
struct GroupAction {
    GroupPtr B;
    GroupPtr X;
    std::vector<std::vector<int>> act; // |B| x |X|

    int apply(int b, int x) const { return act[b][x]; }

    /// Throws Error("NotAnAction", ...) naming the failing condition.
    void validate() const;

    static GroupAction trivial(GroupPtr B, GroupPtr X);
    /// Action of a group on itself by conjugation: b.x = b x b^-1.
    static GroupAction conjugation(GroupPtr G);
};

bool operator==(const GroupAction& a, const GroupAction& b);

/// The semidirect product X x| B on pairs (x,b), encoded as x*|B|+b,
/// with (x,b)(x',b') = (x + b.x', bb'). k, s are the canonical
/// injections and p the projection (x,b) |-> b; (k,s,p) is an exact
/// patch and k = ker p.
struct SemidirectProduct {
    GroupPtr grp;
    GroupHom k; // X -> grp
    GroupHom s; // B -> grp
    GroupHom p; // grp -> B
    int b_order = 0;

    int pair_index(int x, int b) const { return x * b_order + b; }
    std::pair<int, int> decode(int i) const { return {i / b_order, i % b_order}; }
};

SemidirectProduct semidirect_product(const GroupAction& a);

/// All actions of B on X, i.e. all homomorphisms B -> Aut(X), in
/// deterministic (lexicographic over the induced act table) order.
std::vector<GroupAction> enumerate_actions(GroupPtr B, GroupPtr X);

} // namespace xmk
