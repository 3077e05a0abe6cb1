#include "xmodkit/catalog.hpp"

#include "xmodkit/action.hpp"
#include "xmodkit/errors.hpp"

namespace xmk {

namespace {

GroupPtr from_formula(int n, int (*mul)(int, int, int)) {
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = mul(a, b, n);
    return FiniteGroup::make(table);
}

} // namespace

GroupPtr trivial_group() { return cyclic_group(1); }

GroupPtr cyclic_group(int n) {
    if (n < 1) fail("NotLatinSquare", "cyclic group order must be positive");
    return from_formula(n, [](int a, int b, int n_) { return (a + b) % n_; });
}

GroupPtr dihedral_group(int n) {
    // elements (r, f) encoded r*2+f with r in Z_n, f in Z_2;
    // (r,f)(r',f') = (r + (f ? -r' : r'), f+f')
    int m = 2 * n;
    std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                        std::vector<int>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int r1 = a / 2, f1 = a % 2, r2 = b / 2, f2 = b % 2;
            int r = f1 ? (r1 - r2 + n) % n : (r1 + r2) % n;
            table[a][b] = r * 2 + ((f1 + f2) % 2);
        }
    return FiniteGroup::make(table);
}

GroupPtr quaternion_group_8() {
    // x^a y^b with x^4 = 1, y^2 = x^2, y x y^-1 = x^-1; encoded a*2+b.
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int a = i / 2, b = i % 2, c = j / 2, d = j % 2;
            int ra, rb;
            if (b == 0) {
                ra = (a + c) % 4;
                rb = d;
            } else {
                ra = (a - c + 4) % 4;
                rb = 1 + d;
                if (rb == 2) { rb = 0; ra = (ra + 2) % 4; }
            }
            table[i][j] = ra * 2 + rb;
        }
    return FiniteGroup::make(table);
}

GroupPtr symmetric_group_3() { return dihedral_group(3); }

GroupPtr klein_four_group() {
    return direct_product(cyclic_group(2), cyclic_group(2)).grp;
}

std::vector<NamedGroup> groups_of_order(int n) {
    auto prod = [](GroupPtr a, GroupPtr b) { return direct_product(std::move(a), std::move(b)).grp; };
    switch (n) {
        case 1: return {{"1", trivial_group()}};
        case 2: return {{"Z2", cyclic_group(2)}};
        case 3: return {{"Z3", cyclic_group(3)}};
        case 4: return {{"Z4", cyclic_group(4)}, {"Z2xZ2", klein_four_group()}};
        case 5: return {{"Z5", cyclic_group(5)}};
        case 6: return {{"Z6", cyclic_group(6)}, {"S3", symmetric_group_3()}};
        case 7: return {{"Z7", cyclic_group(7)}};
        case 8:
            return {{"Z8", cyclic_group(8)},
                    {"Z4xZ2", prod(cyclic_group(4), cyclic_group(2))},
                    {"Z2xZ2xZ2", prod(klein_four_group(), cyclic_group(2))},
                    {"D4", dihedral_group(4)},
                    {"Q8", quaternion_group_8()}};
        default:
            fail("BoundExceeded", "no catalog for order " + std::to_string(n));
    }
}

std::vector<NamedGroup> groups_up_to_order(int max_order) {
    std::vector<NamedGroup> out;
    for (int n = 1; n <= max_order; ++n)
        for (auto& g : groups_of_order(n)) out.push_back(std::move(g));
    return out;
}

std::vector<NamedGroup> abelian_groups_of_order(int n) {
    std::vector<NamedGroup> out;
    for (auto& g : groups_of_order(n))
        if (g.grp->abelian()) out.push_back(std::move(g));
    return out;
}

std::vector<NamedGroup> abelian_groups_up_to_order(int max_order) {
    std::vector<NamedGroup> out;
    for (int n = 1; n <= max_order; ++n)
        for (auto& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
    return out;
}

} // namespace xmk
