#pragma once

#include "xmodkit/actionsys.hpp"
#include "xmodkit/pointedcat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xmk {

/// Internal categories and groupoids in finite groups, the construction
/// turning a Whitehead sequence into an internal category, its inverse,
/// and round-trip certificates between crossed modules and groupoids.

struct InternalCategory {
    GroupPtr C0, C1;
    GroupHom d, c; // C1 -> C0 (domain / codomain)
    GroupHom e;    // C0 -> C1 (identities)
    PullbackGroup C2; // composable pairs (f, g) with d f = c g; m(f,g) = "f after g"
    GroupHom e1, e2;  // C1 -> C2, f -> (f, e d f) and g -> (e c g, g)
    GroupHom m;       // C2 -> C1
};

/// The object of composable pairs: the pullback of d along c.
PullbackGroup composable_pairs(const GroupHom& d, const GroupHom& c);

/// Assemble category data from (C0, C1, d, c, e), with the composition
/// forced by the unit laws: m(f, g) = f * e(d f)^{-1} * g.  No axioms are
/// checked here; use is_internal_category.
InternalCategory assemble_category(GroupPtr C0, GroupPtr C1, GroupHom d, GroupHom c, GroupHom e);

/// The object of composable triples, in its two pullback presentations:
/// via_m pulls p2 back along m, via_p pulls p2 back along p1.  Both carry
/// pairs of C2-indices; iso is the canonical isomorphism via_m -> via_p,
/// and the four face maps q1, q2, m1, m2: C3 -> C2 are given on via_p.
struct ComposableTriples {
    PullbackGroup via_m; // {(a, b) : p2(a) = m(b)}
    PullbackGroup via_p; // {(a, b) : p2(a) = p1(b)}
    GroupHom iso;        // via_m -> via_p
    GroupHom q1, q2, m1, m2; // via_p -> C2
};
ComposableTriples composable_triples(const InternalCategory& cat);

struct CatCheck {
    std::string name;
    bool pass = true;
    int witness = -1; // element index in the check's domain on failure
};
struct CatReport {
    std::vector<CatCheck> checks;
    bool ok() const;
};

/// Elementwise verification of every internal-category axiom: the four
/// structure maps are homomorphisms, d e = 1, c e = 1, d p1 = c p2,
/// the unit laws m e1 = 1 and m e2 = 1, the boundary compatibilities
/// d m = d p2 and c m = c p1, and associativity m m1 = m m2 on triples.
CatReport is_internal_category(const InternalCategory& cat);

struct GroupoidWitness {
    InternalCategory cat;
    GroupHom inv; // C1 -> C1
};

/// Per-element search for two-sided inverses; present iff the category is
/// a groupoid.  The assembled inversion map is also required to be a
/// homomorphism of C1.
std::optional<GroupoidWitness> is_groupoid(const InternalCategory& cat);

/// The internal category induced by a Whitehead sequence over a group
/// instance: C0 = IA, C1 = FA, d = pi_0, c = I(alpha_1), e = iota_0, and
/// m = I(alpha_2) transported along the identification C2 ~ FA_1.  Raises
/// WStarFailure when that identification is not bijective, and
/// InstanceMismatch on the pointed-set instance.
InternalCategory from_whitehead(const WhiteheadSequence& w);

/// Pullback condition on the tower: for each cartesian lifting
/// alpha_i: A_i -> A_{i-1} with 1 <= i < depth, the square
/// (F(alpha_i), pi_{A_i}) into (pi_{A_{i-1}}, I(alpha_i)) is a pullback.
/// Checked by the universal property and by the cardinality criterion
/// |FE| = |FA| |IE| / |IA|; disagreement of the two is a hard error.
bool wstar_check(const WhiteheadSequence& w, int depth = 3);

/// The inverse construction: X = ker d, the action b.x = e(b) x e(b)^{-1}
/// inside C1, h = c restricted to X, u = (h, 1) and v = (1, h).  v is also
/// rebuilt literally through the comparison isomorphism rho and the two
/// must agree (RhoMismatch otherwise).  Raises NotAGroupoid when the
/// witness is invalid or the recovered data fails the crossed-module
/// equations.
WhiteheadSequence to_whitehead(const GroupoidWitness& g);

/// Certificate for either round trip.  For roundtrip_check, groupoid is
/// the category built from the source crossed module, xmod the recovered
/// one, and (phi1, phi2) = (phi_X, phi_B): source -> recovered commuting
/// with h and the actions.  For roundtrip_check_gpd, xmod is the
/// intermediate crossed module, groupoid the rebuilt groupoid, and
/// (phi1, phi2) = (phi_0, phi_1): source -> rebuilt commuting with
/// d, c, e and m.
struct RoundTripCertificate {
    CrossedModule xmod;
    GroupoidWitness groupoid;
    GroupHom phi1, phi2;
};

/// Crossed module -> category -> groupoid -> crossed module, with an
/// explicit isomorphism pair back to the source.  Raises NotAGroupoid if
/// the built category has no inverses and NoIsomorphismFound if no
/// commuting pair exists.
RoundTripCertificate roundtrip_check(const CrossedModule& cm);

/// Groupoid -> crossed module -> groupoid, dually certified.
RoundTripCertificate roundtrip_check_gpd(const GroupoidWitness& g);

/// Whether the two dashed comparison arrows X x X -> Y and Y -> B x B can
/// be inserted into the three-row split-extension diagram of the exact
/// patch (X -k-> Y <-s- B) against h: X -> B.  Both fillers are forced on
/// generators and must extend to homomorphisms.
bool protomodular_diagram_check(const SplitExtension& patch, const GroupHom& h);

/// All internal groupoids in Grp with |C1| <= max_c1, one per isomorphism
/// class (isomorphism = a pair (phi0, phi1) commuting with d, c, e, m).
/// Raises BoundExceeded when max_c1 > 8.
std::vector<GroupoidWitness> enumerate_internal_groupoids(int max_c1);

} // namespace xmk
