#include "xmodkit/fingroup.hpp"

#include "xmodkit/errors.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>

namespace xmk {

namespace {

// Greedy generating sequence: walk element indices, adding any element
// not yet in the multiplicative closure of the chosen set.
std::vector<int> greedy_generators(const std::vector<int>& table, int n) {
    std::vector<int> gens;
    std::vector<char> in_closure(static_cast<std::size_t>(n), 0);
    int covered = 0;
    for (int e = 0; e < n && covered < n; ++e) {
        if (in_closure[e]) continue;
        gens.push_back(e);
        // close under products with the new generator set
        std::vector<int> frontier;
        if (!in_closure[e]) { in_closure[e] = 1; ++covered; frontier.push_back(e); }
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int a = 0; a < n; ++a) {
                if (!in_closure[a]) continue;
                for (int g : gens) {
                    int p = table[static_cast<std::size_t>(a) * n + g];
                    if (!in_closure[p]) { in_closure[p] = 1; ++covered; next.push_back(p); }
                    int q = table[static_cast<std::size_t>(g) * n + a];
                    if (!in_closure[q]) { in_closure[q] = 1; ++covered; next.push_back(q); }
                }
            }
            frontier = std::move(next);
        }
    }
    return gens;
}

// Word derivation for hom enumeration: every element expressed as a
// product of earlier-derived elements, starting from {identity} u gens.
struct Derivation {
    std::vector<int> gens;       // generator elements (identity excluded)
    std::vector<int> disc;       // discovery order, disc[0] == 0
    std::vector<std::pair<int, int>> expr; // expr[e] = (a, b) with e = a*b; (-1, gi) for generator gi; (-1,-1) for identity
};

Derivation word_derivation(const FiniteGroup& g) {
    int n = g.order();
    Derivation d;
    d.expr.assign(static_cast<std::size_t>(n), {-2, -2});
    std::vector<char> known(static_cast<std::size_t>(n), 0);
    known[0] = 1;
    d.expr[0] = {-1, -1};
    d.disc.push_back(0);
    for (int e = 1; e < n; ++e) {
        if (known[e]) continue;
        d.expr[e] = {-1, static_cast<int>(d.gens.size())};
        d.gens.push_back(e);
        known[e] = 1;
        d.disc.push_back(e);
        // closure: scan discovered list against itself until stable
        bool grew = true;
        while (grew) {
            grew = false;
            std::size_t sz = d.disc.size();
            for (std::size_t i = 0; i < sz; ++i) {
                for (std::size_t j = 0; j < sz; ++j) {
                    int p = g.mul(d.disc[i], d.disc[j]);
                    if (!known[p]) {
                        known[p] = 1;
                        d.expr[p] = {d.disc[i], d.disc[j]};
                        d.disc.push_back(p);
                        grew = true;
                    }
                }
                sz = d.disc.size();
            }
        }
    }
    return d;
}

// Fill a candidate map from generator images following the derivation.
void expand_map(const Derivation& d, const std::vector<int>& gen_images,
                const FiniteGroup& cod, std::vector<int>& out) {
    for (int e : d.disc) {
        auto [a, b] = d.expr[e];
        if (a == -1 && b == -1) out[e] = 0;
        else if (a == -1) out[e] = gen_images[b];
        else out[e] = cod.mul(out[a], out[b]);
    }
}

bool is_hom_map(const FiniteGroup& dom, const FiniteGroup& cod, const std::vector<int>& map) {
    if (map[0] != 0) return false;
    int n = dom.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (map[dom.mul(a, b)] != cod.mul(map[a], map[b])) return false;
    return true;
}

} // namespace

GroupPtr FiniteGroup::make(const std::vector<std::vector<int>>& table,
                           std::vector<std::string> element_names) {
    int n = static_cast<int>(table.size());
    if (n == 0) fail("NotLatinSquare", "empty table");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(table[r].size()) != n)
            fail("NotLatinSquare", "row " + std::to_string(r) + " has wrong length");
        for (int v : table[r]) {
            if (v < 0 || v >= n)
                fail("NotLatinSquare", "row " + std::to_string(r) + " has out-of-range entry");
            flat.push_back(v);
        }
    }

    for (int a = 0; a < n; ++a) {
        if (flat[a] != a)
            fail("NoIdentityAtZero", "table[0][" + std::to_string(a) + "] != " + std::to_string(a));
        if (flat[static_cast<std::size_t>(a) * n] != a)
            fail("NoIdentityAtZero", "table[" + std::to_string(a) + "][0] != " + std::to_string(a));
    }

    // Latin square: each row and column a permutation.
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int ccol = 0; ccol < n; ++ccol) {
            int v = flat[static_cast<std::size_t>(r) * n + ccol];
            if (seen[v]) fail("NotLatinSquare", "row " + std::to_string(r) + " repeats " + std::to_string(v));
            seen[v] = 1;
        }
    }
    for (int ccol = 0; ccol < n; ++ccol) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 0; r < n; ++r) {
            int v = flat[static_cast<std::size_t>(r) * n + ccol];
            if (seen[v]) fail("NotLatinSquare", "column " + std::to_string(ccol) + " repeats " + std::to_string(v));
            seen[v] = 1;
        }
    }

    // Light's associativity test over a generating set: exact, and
    // feasible at tower-sized orders where the naive triple loop is not.
    std::vector<int> gens = greedy_generators(flat, n);
    for (int g : gens) {
        for (int a = 0; a < n; ++a) {
            const int ag = flat[static_cast<std::size_t>(a) * n + g];
            for (int b = 0; b < n; ++b) {
                int gb = flat[static_cast<std::size_t>(g) * n + b];
                if (flat[static_cast<std::size_t>(a) * n + gb] != flat[static_cast<std::size_t>(ag) * n + b])
                    fail("NotAssociative",
                         "triple (" + std::to_string(a) + "," + std::to_string(g) + "," +
                             std::to_string(b) + ")");
            }
        }
    }

    auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    grp->order_ = n;
    grp->table_ = std::move(flat);
    grp->generators_ = std::move(gens);
    grp->names_ = std::move(element_names);
    grp->inv_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (grp->mul(a, b) == 0) {
                if (grp->mul(b, a) != 0)
                    fail("NotAssociative", "one-sided inverse at " + std::to_string(a));
                grp->inv_[a] = b;
                break;
            }
        }
        if (grp->inv_[a] < 0) fail("NotLatinSquare", "no inverse for " + std::to_string(a));
    }
    return grp;
}

bool FiniteGroup::abelian() const {
    // Generators that commute pairwise generate an abelian group, so only
    // generator pairs need checking.
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (mul(generators_[i], generators_[j]) != mul(generators_[j], generators_[i]))
                return false;
    return true;
}

int FiniteGroup::element_order(int a) const {
    int k = 1, p = a;
    while (p != 0) { p = mul(p, a); ++k; }
    return k;
}

std::vector<int> FiniteGroup::order_profile() const {
    std::vector<int> prof(static_cast<std::size_t>(order_));
    for (int a = 0; a < order_; ++a) prof[a] = element_order(a);
    std::sort(prof.begin(), prof.end());
    return prof;
}

std::string FiniteGroup::name_of(int a) const {
    if (a >= 0 && a < static_cast<int>(names_.size())) return names_[a];
    return std::to_string(a);
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.same_table(b); }

void GroupHom::validate() const {
    if (!dom || !cod) fail("NotAHomomorphism", "missing domain or codomain");
    if (static_cast<int>(map.size()) != dom->order())
        fail("NotAHomomorphism", "map length != |dom|");
    for (int v : map)
        if (v < 0 || v >= cod->order()) fail("NotAHomomorphism", "image out of range");
    if (map[0] != 0) fail("BasepointNotPreserved", "map[0] != 0");
    // Checking the generator rows is exact: if f(g b) = f(g) f(b) holds for
    // every generator g and all b, the set of a with f(a b) = f(a) f(b) for
    // all b contains the generators, the identity (map[0] == 0 above), and
    // is closed under products, hence is the whole group.
    int n = dom->order();
    for (int g : dom->generators())
        for (int b = 0; b < n; ++b)
            if (map[dom->mul(g, b)] != cod->mul(map[g], map[b]))
                fail("NotAHomomorphism",
                     "fails at pair (" + std::to_string(g) + "," + std::to_string(b) + ")");
}

bool GroupHom::is_injective() const {
    std::vector<char> seen(static_cast<std::size_t>(cod->order()), 0);
    for (int v : map) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool GroupHom::is_surjective() const {
    std::vector<char> seen(static_cast<std::size_t>(cod->order()), 0);
    int hit = 0;
    for (int v : map)
        if (!seen[v]) { seen[v] = 1; ++hit; }
    return hit == cod->order();
}

GroupHom GroupHom::identity(GroupPtr g) {
    GroupHom h{g, g, std::vector<int>(static_cast<std::size_t>(g->order()))};
    std::iota(h.map.begin(), h.map.end(), 0);
    return h;
}

GroupHom GroupHom::zero(GroupPtr dom, GroupPtr cod) {
    std::vector<int> map(static_cast<std::size_t>(dom->order()), 0);
    return {std::move(dom), std::move(cod), std::move(map)};
}

bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.dom->same_table(*b.dom) && a.cod->same_table(*b.cod) && a.map == b.map;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (!f.cod->same_table(*g.dom)) fail("CodomainMismatch", "compose: cod(f) != dom(g)");
    GroupHom r{f.dom, g.cod, std::vector<int>(f.map.size())};
    for (std::size_t i = 0; i < f.map.size(); ++i) r.map[i] = g.map[f.map[i]];
    return r;
}

GroupHom inverse_hom(const GroupHom& iso) {
    if (!iso.is_bijective()) fail("NotAnIsomorphism", "inverse of non-bijective hom");
    GroupHom r{iso.cod, iso.dom, std::vector<int>(iso.map.size())};
    for (std::size_t i = 0; i < iso.map.size(); ++i) r.map[iso.map[i]] = static_cast<int>(i);
    return r;
}

bool SubgroupWitness::is_normal() const {
    int n = parent->order();
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int e : elements) in[e] = 1;
    for (int g = 0; g < n; ++g)
        for (int e : elements)
            if (!in[parent->mul(parent->mul(g, e), parent->inv(g))]) return false;
    return true;
}

SubgroupWitness subgroup_from_elements(GroupPtr parent, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements[0] != 0) fail("NotASubgroup", "missing identity");
    int m = static_cast<int>(elements.size());
    std::vector<int> pos(static_cast<std::size_t>(parent->order()), -1);
    for (int i = 0; i < m; ++i) pos[elements[i]] = i;
    std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                        std::vector<int>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int p = parent->mul(elements[i], elements[j]);
            if (pos[p] < 0)
                fail("NotASubgroup", "not closed at (" + std::to_string(elements[i]) + "," +
                                         std::to_string(elements[j]) + ")");
            table[i][j] = pos[p];
        }
    SubgroupWitness w;
    w.parent = parent;
    w.sub = FiniteGroup::make(table);
    w.inclusion = GroupHom{w.sub, parent, elements};
    w.elements = std::move(elements);
    return w;
}

SubgroupWitness generated_subgroup(GroupPtr parent, const std::vector<int>& gens) {
    std::vector<char> in(static_cast<std::size_t>(parent->order()), 0);
    std::vector<int> elems{0};
    in[0] = 1;
    for (int g : gens)
        if (!in[g]) { in[g] = 1; elems.push_back(g); }
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t sz = elems.size();
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = 0; j < sz; ++j) {
                int p = parent->mul(elems[i], elems[j]);
                if (!in[p]) { in[p] = 1; elems.push_back(p); grew = true; }
            }
    }
    return subgroup_from_elements(parent, std::move(elems));
}

SubgroupWitness kernel(const GroupHom& f) {
    std::vector<int> elems;
    for (int a = 0; a < f.dom->order(); ++a)
        if (f.map[a] == 0) elems.push_back(a);
    return subgroup_from_elements(f.dom, std::move(elems));
}

std::vector<int> image_elements(const GroupHom& f) {
    std::vector<int> img(f.map);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

ProductGroup direct_product(GroupPtr left, GroupPtr right) {
    // Products of the same factors recur heavily in tower constructions;
    // a short FIFO cache bounds both recomputation and memory.
    struct Entry {
        GroupPtr l, r;
        ProductGroup p;
    };
    static std::mutex cache_mu;
    static std::deque<Entry> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        for (const auto& e : cache)
            if (e.l == left && e.r == right) return e.p;
    }
    int nl = left->order(), nr = right->order();
    int n = nl * nr;
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int a1 = 0; a1 < nl; ++a1)
        for (int a2 = 0; a2 < nr; ++a2)
            for (int b1 = 0; b1 < nl; ++b1)
                for (int b2 = 0; b2 < nr; ++b2)
                    table[a1 * nr + a2][b1 * nr + b2] = left->mul(a1, b1) * nr + right->mul(a2, b2);
    ProductGroup p;
    p.grp = FiniteGroup::make(table);
    p.left_order = nl;
    p.right_order = nr;
    p.proj1 = GroupHom{p.grp, left, {}};
    p.proj2 = GroupHom{p.grp, right, {}};
    p.inj1 = GroupHom{left, p.grp, {}};
    p.inj2 = GroupHom{right, p.grp, {}};
    p.proj1.map.resize(static_cast<std::size_t>(n));
    p.proj2.map.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        p.proj1.map[i] = i / nr;
        p.proj2.map[i] = i % nr;
    }
    p.inj1.map.resize(static_cast<std::size_t>(nl));
    for (int a = 0; a < nl; ++a) p.inj1.map[a] = a * nr;
    p.inj2.map.resize(static_cast<std::size_t>(nr));
    for (int b = 0; b < nr; ++b) p.inj2.map[b] = b;
    std::lock_guard<std::mutex> lock(cache_mu);
    cache.push_back(Entry{std::move(left), std::move(right), p});
    if (cache.size() > 4) cache.pop_front();
    return p;
}

int PullbackGroup::index_of(int a, int b) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b));
    if (it == pairs.end() || *it != std::make_pair(a, b)) fail("NotASubgroup", "pair not in pullback");
    return static_cast<int>(it - pairs.begin());
}

PullbackGroup pullback(const GroupHom& f, const GroupHom& g) {
    if (!f.cod->same_table(*g.cod)) fail("CodomainMismatch", "pullback: cod(f) != cod(g)");
    PullbackGroup pb;
    for (int a = 0; a < f.dom->order(); ++a)
        for (int b = 0; b < g.dom->order(); ++b)
            if (f.map[a] == g.map[b]) pb.pairs.emplace_back(a, b);
    int n = static_cast<int>(pb.pairs.size());
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[i][j] = pb.index_of(f.dom->mul(pb.pairs[i].first, pb.pairs[j].first),
                                      g.dom->mul(pb.pairs[i].second, pb.pairs[j].second));
    pb.grp = FiniteGroup::make(table);
    pb.proj1 = GroupHom{pb.grp, f.dom, {}};
    pb.proj2 = GroupHom{pb.grp, g.dom, {}};
    pb.proj1.map.resize(static_cast<std::size_t>(n));
    pb.proj2.map.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        pb.proj1.map[i] = pb.pairs[i].first;
        pb.proj2.map[i] = pb.pairs[i].second;
    }
    return pb;
}

namespace {

// Shared enumeration core: walk generator-image tuples in lexicographic
// order; candidates[k] restricts images of generator k.
template <typename Fn>
void for_each_hom_candidate(const FiniteGroup& dom, const FiniteGroup& cod,
                            const std::vector<std::vector<int>>& candidates, Fn&& fn) {
    Derivation d = word_derivation(dom);
    std::size_t k = d.gens.size();
    std::vector<int> map(static_cast<std::size_t>(dom.order()));
    if (k == 0) {
        map[0] = 0;
        if (is_hom_map(dom, cod, map)) fn(map);
        return;
    }
    std::vector<std::size_t> idx(k, 0);
    std::vector<int> images(k);
    while (true) {
        bool viable = true;
        for (std::size_t i = 0; i < k; ++i) {
            if (idx[i] >= candidates[i].size()) { viable = false; break; }
            images[i] = candidates[i][idx[i]];
        }
        if (!viable) break;
        expand_map(d, images, cod, map);
        if (is_hom_map(dom, cod, map)) {
            if (fn(map)) return; // early stop
        }
        // lexicographic increment
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < candidates[pos].size()) break;
            if (pos == 0) return;
            idx[pos] = 0;
        }
    }
}

std::vector<std::vector<int>> all_candidates(const FiniteGroup& dom, const FiniteGroup& cod,
                                             bool match_element_order) {
    Derivation d = word_derivation(dom);
    std::vector<std::vector<int>> cands(d.gens.size());
    for (std::size_t i = 0; i < d.gens.size(); ++i) {
        int go = dom.element_order(d.gens[i]);
        for (int h = 0; h < cod.order(); ++h) {
            int ho = cod.element_order(h);
            bool ok = match_element_order ? (ho == go) : (go % ho == 0);
            if (ok) cands[i].push_back(h);
        }
    }
    return cands;
}

} // namespace

std::vector<GroupHom> enumerate_homs(GroupPtr dom, GroupPtr cod) {
    std::vector<std::vector<int>> maps;
    auto cands = all_candidates(*dom, *cod, /*match_element_order=*/false);
    for_each_hom_candidate(*dom, *cod, cands, [&](const std::vector<int>& m) {
        maps.push_back(m);
        return false;
    });
    std::sort(maps.begin(), maps.end());
    maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
    std::vector<GroupHom> out;
    out.reserve(maps.size());
    for (auto& m : maps) out.push_back(GroupHom{dom, cod, std::move(m)});
    return out;
}

std::vector<GroupHom> enumerate_isomorphisms(GroupPtr g, GroupPtr h) {
    std::vector<GroupHom> out;
    if (g->order() != h->order() || g->order_profile() != h->order_profile()) return out;
    std::vector<std::vector<int>> maps;
    auto cands = all_candidates(*g, *h, /*match_element_order=*/true);
    for_each_hom_candidate(*g, *h, cands, [&](const std::vector<int>& m) {
        std::vector<char> seen(m.size(), 0);
        for (int v : m) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
        maps.push_back(m);
        return false;
    });
    std::sort(maps.begin(), maps.end());
    maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
    out.reserve(maps.size());
    for (auto& m : maps) out.push_back(GroupHom{g, h, std::move(m)});
    return out;
}

std::optional<GroupHom> find_isomorphism(GroupPtr g, GroupPtr h, int max_order) {
    if (g->order() > max_order || h->order() > max_order)
        fail("OrderTooLarge", "order exceeds bound " + std::to_string(max_order));
    if (g->order() != h->order() || g->order_profile() != h->order_profile()) return std::nullopt;
    std::optional<GroupHom> found;
    auto cands = all_candidates(*g, *h, /*match_element_order=*/true);
    for_each_hom_candidate(*g, *h, cands, [&](const std::vector<int>& m) {
        std::vector<char> seen(m.size(), 0);
        for (int v : m) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
        found = GroupHom{g, h, m};
        return true;
    });
    return found;
}

AutomorphismGroup automorphism_group(GroupPtr g) {
    AutomorphismGroup ag;
    ag.base = g;
    for (auto& iso : enumerate_isomorphisms(g, g)) ag.maps.push_back(iso.map);
    int n = static_cast<int>(ag.maps.size());
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> comp(ag.maps[i].size());
            for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = ag.maps[i][ag.maps[j][x]];
            auto it = std::lower_bound(ag.maps.begin(), ag.maps.end(), comp);
            table[i][j] = static_cast<int>(it - ag.maps.begin());
        }
    ag.grp = FiniteGroup::make(table);
    return ag;
}

} // namespace xmk
