#include "xmodkit/action.hpp"

#include "xmodkit/errors.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace xmk {

void GroupAction::validate() const {
    if (!B || !X) fail("NotAnAction", "missing groups");
    int nb = B->order(), nx = X->order();
    if (static_cast<int>(act.size()) != nb) fail("NotAnAction", "act has wrong row count");
    for (int b = 0; b < nb; ++b) {
        if (static_cast<int>(act[b].size()) != nx) fail("NotAnAction", "act row has wrong length");
        for (int v : act[b])
            if (v < 0 || v >= nx) fail("NotAnAction", "act entry out of range");
    }
    for (int x = 0; x < nx; ++x)
        if (act[0][x] != x) fail("NotAnAction", "identity acts nontrivially at " + std::to_string(x));
    // each act[b] an automorphism of X
    for (int b = 0; b < nb; ++b) {
        std::vector<char> seen(static_cast<std::size_t>(nx), 0);
        for (int v : act[b]) {
            if (seen[v]) fail("NotAnAction", "act[" + std::to_string(b) + "] not bijective");
            seen[v] = 1;
        }
        for (int x = 0; x < nx; ++x)
            for (int y = 0; y < nx; ++y)
                if (act[b][X->mul(x, y)] != X->mul(act[b][x], act[b][y]))
                    fail("NotAnAction", "act[" + std::to_string(b) + "] not a homomorphism");
    }
    for (int b = 0; b < nb; ++b)
        for (int b2 = 0; b2 < nb; ++b2)
            for (int x = 0; x < nx; ++x)
                if (act[B->mul(b, b2)][x] != act[b][act[b2][x]])
                    fail("NotAnAction", "functoriality fails at (" + std::to_string(b) + "," +
                                            std::to_string(b2) + "," + std::to_string(x) + ")");
}

GroupAction GroupAction::trivial(GroupPtr B, GroupPtr X) {
    GroupAction a{std::move(B), std::move(X), {}};
    a.act.assign(static_cast<std::size_t>(a.B->order()),
                 std::vector<int>(static_cast<std::size_t>(a.X->order())));
    for (auto& row : a.act)
        for (int x = 0; x < a.X->order(); ++x) row[x] = x;
    return a;
}

GroupAction GroupAction::conjugation(GroupPtr G) {
    GroupAction a{G, G, {}};
    int n = G->order();
    a.act.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int b = 0; b < n; ++b)
        for (int x = 0; x < n; ++x) a.act[b][x] = G->mul(G->mul(b, x), G->inv(b));
    return a;
}

bool operator==(const GroupAction& a, const GroupAction& b) {
    return a.B->same_table(*b.B) && a.X->same_table(*b.X) && a.act == b.act;
}

SemidirectProduct semidirect_product(const GroupAction& a) {
    // Tower constructions rebuild the same semidirect product many times;
    // a short FIFO cache bounds both recomputation and memory.
    struct Entry {
        GroupAction a;
        SemidirectProduct sd;
    };
    static std::mutex cache_mu;
    static std::deque<Entry> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        for (const auto& e : cache)
            if (e.a.B == a.B && e.a.X == a.X && e.a.act == a.act) return e.sd;
    }
    int nx = a.X->order(), nb = a.B->order();
    int n = nx * nb;
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 0; x < nx; ++x)
        for (int b = 0; b < nb; ++b)
            for (int x2 = 0; x2 < nx; ++x2)
                for (int b2 = 0; b2 < nb; ++b2)
                    table[x * nb + b][x2 * nb + b2] =
                        a.X->mul(x, a.act[b][x2]) * nb + a.B->mul(b, b2);
    SemidirectProduct sd;
    sd.grp = FiniteGroup::make(table);
    sd.b_order = nb;
    sd.k = GroupHom{a.X, sd.grp, std::vector<int>(static_cast<std::size_t>(nx))};
    for (int x = 0; x < nx; ++x) sd.k.map[x] = x * nb;
    sd.s = GroupHom{a.B, sd.grp, std::vector<int>(static_cast<std::size_t>(nb))};
    for (int b = 0; b < nb; ++b) sd.s.map[b] = b;
    sd.p = GroupHom{sd.grp, a.B, std::vector<int>(static_cast<std::size_t>(n))};
    for (int i = 0; i < n; ++i) sd.p.map[i] = i % nb;
    std::lock_guard<std::mutex> lock(cache_mu);
    cache.push_back(Entry{a, sd});
    if (cache.size() > 4) cache.pop_front();
    return sd;
}

std::vector<GroupAction> enumerate_actions(GroupPtr B, GroupPtr X) {
    AutomorphismGroup aut = automorphism_group(X);
    std::vector<GroupAction> out;
    for (const GroupHom& phi : enumerate_homs(B, aut.grp)) {
        GroupAction a{B, X, {}};
        a.act.reserve(static_cast<std::size_t>(B->order()));
        for (int b = 0; b < B->order(); ++b) a.act.push_back(aut.maps[phi.map[b]]);
        out.push_back(std::move(a));
    }
    std::sort(out.begin(), out.end(),
              [](const GroupAction& a, const GroupAction& b) { return a.act < b.act; });
    return out;
}

} // namespace xmk
