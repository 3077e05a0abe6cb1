#pragma once

#include "xmodkit/action.hpp"
#include "xmodkit/fingroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xmk {

/// The three pointed base categories everything runs over: finite groups,
/// finite abelian groups, and finite pointed sets.  A pointed set is a
/// carrier {0,..,n-1} with basepoint 0; maps need only preserve 0.

enum class Instance { Grp, Ab, PSet };

std::string instance_name(Instance i);

struct PointedObject {
    Instance instance = Instance::Grp;
    GroupPtr grp;      // Grp / Ab payload
    int pset_size = 0; // PSet payload

    int size() const;
    bool trivial() const { return size() == 1; }
    void validate() const;

    static PointedObject group(GroupPtr g);
    static PointedObject abelian(GroupPtr g);
    static PointedObject pset(int n);
};

bool same_object(const PointedObject& a, const PointedObject& b);

struct PointedMap {
    Instance instance = Instance::Grp;
    PointedObject dom, cod;
    std::vector<int> map;

    int operator()(int i) const { return map[static_cast<std::size_t>(i)]; }
    void validate() const;
    bool is_bijective() const;

    static PointedMap identity(const PointedObject& a);
    static PointedMap zero(const PointedObject& dom, const PointedObject& cod);
};

/// g after f.
PointedMap compose(const PointedMap& g, const PointedMap& f);

/// All basepoint-preserving maps dom -> cod (homs in Grp/Ab), lexicographic.
std::vector<PointedMap> enumerate_pointed_maps(const PointedObject& dom, const PointedObject& cod);

/// One object per isomorphism class with size <= bound, smallest first.
std::vector<PointedObject> test_objects(Instance ins, int bound);

struct Cospan {
    PointedObject X, Y, B;
    PointedMap k; // X -> Y
    PointedMap s; // B -> Y
    void validate() const;
};

struct PatchWitness {
    Cospan cospan;
    PointedMap p; // Y -> B with p k = 0, p s = 1
    void validate() const;
};

struct Point {
    PointedObject Y, B;
    PointedMap p; // Y -> B
    PointedMap s; // B -> Y, p s = 1
    void validate() const;
};

struct SplitExtension {
    Point point;
    PointedObject X;
    PointedMap k; // X -> Y, the kernel of p
    void validate() const;
};

bool jointly_epimorphic(const PointedMap& k, const PointedMap& s);

/// The unique retraction p with p s = 1 and p k = 0, when the cospan is a
/// patch; absent otherwise.
std::optional<PointedMap> patch_retraction(const Cospan& c);

/// k is (isomorphic onto) the kernel of p.
bool is_exact_patch(const PatchWitness& w);

/// Bounded check of stability: pulling the patch back along every map
/// h: Z -> B with |Z| <= test_bound again yields a patch.
bool is_stable_patch(const PatchWitness& w, int test_bound);

struct PulledBackPoint {
    Point point;   // over dom(h)
    Cospan cospan; // (<k,0>, <s h, 1>) into Y x_B Z
};

/// Pullback of the point along h: Z -> B, together with the induced cospan.
PulledBackPoint point_pullback(const Point& pt, const PointedMap& h);

/// Kernel of a pointed map as a split-extension-style leg: the object and
/// its inclusion (Grp/Ab: subgroup kernel; PSet: fiber of the basepoint).
std::pair<PointedObject, PointedMap> pointed_kernel(const PointedMap& p);

/// Coproduct cospan: biproduct in Ab, wedge in PSet.  (Not available in Grp,
/// where coproducts are infinite.)
Cospan coproduct_cospan(const PointedObject& X, const PointedObject& B);

/// The semidirect cospan X -> X><|B <- B of a group action, as a Grp cospan.
Cospan semidirect_cospan(const GroupAction& a);

/// Extend a partial map given on a generating set to the unique compatible
/// homomorphism dom -> cod, if one exists: seed values are propagated along
/// products and the result is verified to be a total homomorphism.
std::optional<std::vector<int>> forced_group_map(const FiniteGroup& dom, const FiniteGroup& cod,
                                                 const std::vector<std::pair<int, int>>& seeds);

} // namespace xmk
