#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace xmk {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Exact multiplication-table group. Elements are dense indices 0..n-1,
/// the identity is pinned at index 0. Immutable after validated
/// construction; safe to share across threads.
class FiniteGroup {
public:
    /// Validates and builds a group. Throws Error with code
    /// NoIdentityAtZero, NotLatinSquare or NotAssociative (naming the
    /// failing row/triple) on invalid input.
    static GroupPtr make(const std::vector<std::vector<int>>& table,
                         std::vector<std::string> element_names = {});

    int order() const noexcept { return order_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }

    bool abelian() const;
    int element_order(int a) const;
    /// Sorted multiset of element orders; a cheap isomorphism invariant.
    std::vector<int> order_profile() const;

    /// A fixed generating sequence: greedy over element indices, each
    /// generator chosen as the least element outside the closure so far.
    const std::vector<int>& generators() const noexcept { return generators_; }

    const std::vector<std::string>& element_names() const noexcept { return names_; }
    std::string name_of(int a) const;

    bool same_table(const FiniteGroup& other) const;

    const std::vector<int>& flat_table() const noexcept { return table_; }

private:
    FiniteGroup() = default;

    int order_ = 0;
    std::vector<int> table_; // row-major, order x order
    std::vector<int> inv_;
    std::vector<int> generators_;
    std::vector<std::string> names_;
};

bool operator==(const FiniteGroup& a, const FiniteGroup& b);

/// Group homomorphism as a total map of element indices.
struct GroupHom {
    GroupPtr dom;
    GroupPtr cod;
    std::vector<int> map;

    int operator()(int a) const { return map[a]; }

    /// Throws Error("NotAHomomorphism", ...) naming a failing pair,
    /// or "BasepointNotPreserved" when map[0] != 0.
    void validate() const;

    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }

    static GroupHom identity(GroupPtr g);
    static GroupHom zero(GroupPtr dom, GroupPtr cod);
};

bool operator==(const GroupHom& a, const GroupHom& b);

/// g after f (dom(g) must match cod(f) structurally).
GroupHom compose(const GroupHom& g, const GroupHom& f);

GroupHom inverse_hom(const GroupHom& iso);

/// A subgroup carried with its parent: `sub` is the subgroup as a
/// standalone group (identity re-indexed to 0 = parent element 0) and
/// `inclusion` embeds it back into the parent.
struct SubgroupWitness {
    GroupPtr parent;
    std::vector<int> elements; // sorted parent indices, elements[0] == 0
    GroupPtr sub;
    GroupHom inclusion; // sub -> parent

    bool is_normal() const;
};

SubgroupWitness subgroup_from_elements(GroupPtr parent, std::vector<int> elements);
SubgroupWitness generated_subgroup(GroupPtr parent, const std::vector<int>& gens);

SubgroupWitness kernel(const GroupHom& f);
std::vector<int> image_elements(const GroupHom& f);

struct ProductGroup {
    GroupPtr grp;
    GroupHom proj1, proj2; // grp -> factors
    GroupHom inj1, inj2;   // factors -> grp
    int left_order = 0, right_order = 0;

    int pair_index(int a, int b) const { return a * right_order + b; }
    std::pair<int, int> decode(int i) const { return {i / right_order, i % right_order}; }
};

ProductGroup direct_product(GroupPtr left, GroupPtr right);

struct PullbackGroup {
    GroupPtr grp;
    GroupHom proj1, proj2; // grp -> dom(f), dom(g)
    std::vector<std::pair<int, int>> pairs; // element i of grp is pairs[i]
    int index_of(int a, int b) const;
};

/// Pullback of f along g (shared codomain): the subgroup
/// {(a,b) : f(a) = g(b)} of dom(f) x dom(g), pairs in lexicographic
/// order. Throws Error("CodomainMismatch", ...) when cod(f) != cod(g).
PullbackGroup pullback(const GroupHom& f, const GroupHom& g);

/// All homomorphisms dom -> cod, sorted lexicographically on the map
/// array. Generator-based enumeration; exact and deterministic.
std::vector<GroupHom> enumerate_homs(GroupPtr dom, GroupPtr cod);

/// Generator-based backtracking isomorphism search, deterministic order.
/// Throws Error("OrderTooLarge", ...) when either order exceeds max_order.
std::optional<GroupHom> find_isomorphism(GroupPtr g, GroupPtr h, int max_order = 24);

/// All isomorphisms g -> h (lexicographic map order).
std::vector<GroupHom> enumerate_isomorphisms(GroupPtr g, GroupPtr h);

struct AutomorphismGroup {
    GroupPtr grp;                        // composition group, identity at 0
    std::vector<std::vector<int>> maps;  // maps[i] is the i-th automorphism
    GroupPtr base;
};

/// maps sorted lexicographically (identity lands at index 0);
/// grp.mul(i, j) is composition maps[i] after maps[j].
AutomorphismGroup automorphism_group(GroupPtr g);

} // namespace xmk
