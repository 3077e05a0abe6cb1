#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xmodkit/action.hpp"
#include "xmodkit/catalog.hpp"
#include "xmodkit/errors.hpp"
#include "xmodkit/fingroup.hpp"

#include <algorithm>
#include <numeric>

using namespace xmk;

namespace {

// Independent oracle: full O(n^3) associativity plus axiom checks,
// straight off the table.
bool naive_is_group(const std::vector<std::vector<int>>& t) {
    int n = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a)
        if (t[0][a] != a || t[a][0] != a) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
    for (int a = 0; a < n; ++a) {
        bool inv = false;
        for (int b = 0; b < n; ++b)
            if (t[a][b] == 0 && t[b][a] == 0) inv = true;
        if (!inv) return false;
    }
    return true;
}

std::vector<std::vector<int>> table_of(const FiniteGroup& g) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(g.order()),
                                    std::vector<int>(static_cast<std::size_t>(g.order())));
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
    return t;
}

// Oracle: all homs by brute force over every map vector (tiny orders only).
int count_homs_brute(const FiniteGroup& dom, const FiniteGroup& cod) {
    int n = dom.order(), m = cod.order();
    long total = 1;
    for (int i = 1; i < n; ++i) total *= m;
    int count = 0;
    for (long code = 0; code < total; ++code) {
        std::vector<int> map(static_cast<std::size_t>(n), 0);
        long c = code;
        for (int i = 1; i < n; ++i) { map[i] = static_cast<int>(c % m); c /= m; }
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (map[dom.mul(a, b)] != cod.mul(map[a], map[b])) ok = false;
        if (ok) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("make_group accepts valid tables") {
    auto one = FiniteGroup::make({{0}});
    CHECK(one->order() == 1);
    auto z2 = FiniteGroup::make({{0, 1}, {1, 0}});
    CHECK(z2->order() == 2);
    CHECK(z2->inv(1) == 1);
}

TEST_CASE("make_group rejects bad tables with named errors") {
    CHECK_THROWS_WITH_AS(FiniteGroup::make({{0, 1}, {1, 1}}),
                         doctest::Contains("NotLatinSquare"), Error);
    CHECK_THROWS_WITH_AS(FiniteGroup::make({{1, 0}, {0, 1}}),
                         doctest::Contains("NoIdentityAtZero"), Error);
    // Latin square with identity but not associative: order 5 loop
    std::vector<std::vector<int>> loop = {
        {0, 1, 2, 3, 4},
        {1, 0, 3, 4, 2},
        {2, 4, 0, 1, 3},
        {3, 2, 4, 0, 1},
        {4, 3, 1, 2, 0},
    };
    REQUIRE_FALSE(naive_is_group(loop));
    CHECK_THROWS_WITH_AS(FiniteGroup::make(loop), doctest::Contains("NotAssociative"), Error);
}

TEST_CASE("catalog groups satisfy the axioms (naive oracle)") {
    for (auto& [name, g] : groups_up_to_order(8)) {
        INFO(name);
        CHECK(naive_is_group(table_of(*g)));
    }
}

TEST_CASE("kernel") {
    auto z2 = cyclic_group(2);
    auto id = GroupHom::identity(z2);
    CHECK(kernel(id).elements == std::vector<int>{0});
    auto zero = GroupHom::zero(z2, z2);
    CHECK(kernel(zero).elements == std::vector<int>{0, 1});

    // projection Z2 + Z2 -> Z2 onto the second coordinate
    auto prod = direct_product(z2, z2);
    auto ker = kernel(prod.proj2);
    // oracle: enumerate the fiber of 0 directly
    std::vector<int> fiber;
    for (int i = 0; i < 4; ++i)
        if (prod.proj2.map[i] == 0) fiber.push_back(i);
    CHECK(ker.elements == fiber);
    CHECK(ker.sub->order() == 2);
    CHECK(ker.is_normal());
}

TEST_CASE("kernels are always normal") {
    auto s3 = symmetric_group_3();
    auto z2 = cyclic_group(2);
    for (auto& h : enumerate_homs(s3, z2)) CHECK(kernel(h).is_normal());
    for (auto& h : enumerate_homs(s3, s3)) CHECK(kernel(h).is_normal());
}

TEST_CASE("pullback basics") {
    auto z2 = cyclic_group(2);
    auto id = GroupHom::identity(z2);
    auto pb = pullback(id, id);
    CHECK(pb.grp->order() == 2); // diagonal
    CHECK(pb.pairs == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});

    // pullback over the trivial group is the full direct product
    auto z3 = cyclic_group(3);
    auto one = trivial_group();
    auto pb2 = pullback(GroupHom::zero(z2, one), GroupHom::zero(z3, one));
    CHECK(pb2.grp->order() == 6);

    CHECK_THROWS_WITH_AS(pullback(id, GroupHom::identity(z3)),
                         doctest::Contains("CodomainMismatch"), Error);
}

TEST_CASE("pullback universal property (exhaustive cones at small order)") {
    auto z4 = cyclic_group(4);
    auto z2 = cyclic_group(2);
    GroupHom f{z4, z2, {0, 1, 0, 1}};
    f.validate();
    auto g = GroupHom::identity(z2);
    auto pb = pullback(f, g);
    for (auto& [zname, z] : groups_up_to_order(4)) {
        INFO(zname);
        for (auto& u : enumerate_homs(z, z4))
            for (auto& v : enumerate_homs(z, z2)) {
                if (compose(f, u).map != compose(g, v).map) continue;
                int mediating = 0;
                for (auto& w : enumerate_homs(z, pb.grp))
                    if (compose(pb.proj1, w).map == u.map && compose(pb.proj2, w).map == v.map)
                        ++mediating;
                CHECK(mediating == 1);
            }
    }
}

TEST_CASE("semidirect products") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);

    auto triv = semidirect_product(GroupAction::trivial(z2, z3));
    CHECK(triv.grp->order() == 6);
    CHECK(triv.grp->abelian());

    // inversion action of Z2 on Z3
    GroupAction invAct{z2, z3, {{0, 1, 2}, {0, 2, 1}}};
    invAct.validate();
    auto sd = semidirect_product(invAct);
    CHECK(sd.grp->order() == 6);
    CHECK(naive_is_group(table_of(*sd.grp)));
    CHECK_FALSE(sd.grp->abelian());

    // p o s = id, p o k = 0, k = ker p
    CHECK(compose(sd.p, sd.s).map == GroupHom::identity(z2).map);
    CHECK(compose(sd.p, sd.k).map == GroupHom::zero(z3, z2).map);
    auto ker = kernel(sd.p);
    std::vector<int> kimg(sd.k.map);
    std::sort(kimg.begin(), kimg.end());
    CHECK(ker.elements == kimg);

    // action of B on the trivial group gives B back
    auto onB = semidirect_product(GroupAction::trivial(z2, trivial_group()));
    CHECK(find_isomorphism(onB.grp, z2).has_value());
}

TEST_CASE("semidirect with trivial action is the direct product (|X|,|B| <= 6)") {
    auto groups = groups_up_to_order(6);
    for (auto& [xn, x] : groups)
        for (auto& [bn, b] : groups) {
            INFO(xn << " x| " << bn);
            auto sd = semidirect_product(GroupAction::trivial(b, x));
            auto dp = direct_product(x, b);
            CHECK(find_isomorphism(sd.grp, dp.grp, 36).has_value());
        }
}

TEST_CASE("find_isomorphism") {
    auto z2 = cyclic_group(2);
    auto iso = find_isomorphism(z2, cyclic_group(2));
    REQUIRE(iso.has_value());
    CHECK(iso->map == std::vector<int>{0, 1});

    CHECK_FALSE(find_isomorphism(cyclic_group(4), klein_four_group()).has_value());

    GroupAction invAct{z2, cyclic_group(3), {{0, 1, 2}, {0, 2, 1}}};
    auto sd = semidirect_product(invAct);
    auto iso2 = find_isomorphism(sd.grp, symmetric_group_3());
    REQUIRE(iso2.has_value());
    iso2->validate();
    CHECK(iso2->is_bijective());

    CHECK_THROWS_WITH_AS(find_isomorphism(cyclic_group(25), cyclic_group(25)),
                         doctest::Contains("OrderTooLarge"), Error);
}

TEST_CASE("enumerate_homs matches brute force on small groups") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    auto z4 = cyclic_group(4);
    auto s3 = symmetric_group_3();

    auto homs = enumerate_homs(z2, z2);
    REQUIRE(homs.size() == 2);
    CHECK(homs[0].map == std::vector<int>{0, 0});
    CHECK(homs[1].map == std::vector<int>{0, 1});

    CHECK(static_cast<int>(enumerate_homs(z3, z3).size()) == count_homs_brute(*z3, *z3));
    CHECK(static_cast<int>(enumerate_homs(z4, z2).size()) == count_homs_brute(*z4, *z2));
    CHECK(static_cast<int>(enumerate_homs(s3, z2).size()) == count_homs_brute(*s3, *z2));
    CHECK(static_cast<int>(enumerate_homs(z2, s3).size()) == count_homs_brute(*z2, *s3));
    CHECK(static_cast<int>(enumerate_homs(s3, s3).size()) == count_homs_brute(*s3, *s3));

    // lexicographic order
    auto hs = enumerate_homs(z4, z4);
    CHECK(std::is_sorted(hs.begin(), hs.end(),
                         [](const GroupHom& a, const GroupHom& b) { return a.map < b.map; }));
    for (auto& h : hs) h.validate();
}

TEST_CASE("automorphism groups") {
    auto autZ2 = automorphism_group(cyclic_group(2));
    CHECK(autZ2.grp->order() == 1);

    // oracle: brute force over bijections of Z3
    auto z3 = cyclic_group(3);
    int brute = 0;
    std::vector<int> perm{0, 1, 2};
    do {
        if (perm[0] != 0) continue;
        bool ok = true;
        for (int a = 0; a < 3 && ok; ++a)
            for (int b = 0; b < 3 && ok; ++b)
                if (perm[z3->mul(a, b)] != z3->mul(perm[a], perm[b])) ok = false;
        if (ok) ++brute;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(brute == 2);
    auto autZ3 = automorphism_group(z3);
    CHECK(autZ3.grp->order() == 2);
    CHECK(autZ3.maps[0] == std::vector<int>{0, 1, 2});

    CHECK(automorphism_group(klein_four_group()).grp->order() == 6);
    CHECK(automorphism_group(symmetric_group_3()).grp->order() == 6);
    CHECK(automorphism_group(cyclic_group(8)).grp->order() == 4);
    CHECK(automorphism_group(quaternion_group_8()).grp->order() == 24);
}

TEST_CASE("enumerate_actions") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    auto acts = enumerate_actions(z2, z3);
    REQUIRE(acts.size() == 2); // trivial and inversion
    for (auto& a : acts) a.validate();
    CHECK(enumerate_actions(z3, z2).size() == 1);
    CHECK(enumerate_actions(z2, klein_four_group()).size() == 4); // id + three involutions
}

TEST_CASE("subgroups and images") {
    auto s3 = symmetric_group_3();
    auto sub = generated_subgroup(s3, {2}); // a rotation
    CHECK(sub.sub->order() == 3);
    CHECK(sub.is_normal());
    CHECK_THROWS_WITH_AS(subgroup_from_elements(s3, {0, 1, 2}), doctest::Contains("NotASubgroup"),
                         Error);
}
