#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cosetcover/subgroup.hpp"
#include "cosetcover/zsystem.hpp"

namespace cosetcover {

/// {2Z, 3Z, 1+4Z, 5+6Z, 7+12Z}: a cover of Z with distinct moduli.
ZSystem classic_cover();
/// {2Z, 4Z, 2+4Z}: regular, but odd integers are left uncovered.
ZSystem regular_noncover();
/// Point-stabilizer partition of S_k (2 <= k <= 6).
CosetSystem example21(std::size_t k);
/// The three subgroups of order 2 in Z2 x Z2.
CosetSystem klein_cover();
/// The three cyclic subgroups of order 4 in Q8.
CosetSystem q8_cover();
/// Centralizers of a maximal pairwise non-commuting set.
CosetSystem centralizer_cover(std::string_view group_spec);

/// Names accepted by the demo command, in display order.
const std::vector<std::string>& demo_names();

/// Every proper subgroup of order `order`, as a system with identity representatives.
CosetSystem subgroups_of_order(const GroupPtr& g, std::size_t order);

}  // namespace cosetcover
