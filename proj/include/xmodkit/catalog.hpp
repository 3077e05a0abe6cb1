#pragma once

#include "xmodkit/fingroup.hpp"

#include <string>
#include <vector>

namespace xmk {

/// Small-group catalog used by exhaustive searches and stability tests.
/// Covers every isomorphism class of order <= 8; deterministic order.

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
/// Dihedral group of order 2n (n >= 1); dihedral_group(3) is S3.
GroupPtr dihedral_group(int n);
GroupPtr quaternion_group_8();
GroupPtr symmetric_group_3();
GroupPtr klein_four_group();

struct NamedGroup {
    std::string name;
    GroupPtr grp;
};

/// All isomorphism classes of groups of the given order (order <= 8).
std::vector<NamedGroup> groups_of_order(int n);
std::vector<NamedGroup> groups_up_to_order(int max_order);

std::vector<NamedGroup> abelian_groups_of_order(int n);
std::vector<NamedGroup> abelian_groups_up_to_order(int max_order);

} // namespace xmk
