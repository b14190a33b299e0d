#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polyflam/groups/contribution.hpp"
#include "polyflam/groups/group_table.hpp"

namespace polyflam::polygen {

// All multisets of size 1..max_size over n_groups items, each exactly once,
// in deterministic order (by size, then lexicographically by nondecreasing
// index tuple). A multiset is returned as (index, count) pairs with strictly
// increasing indices.
std::vector<std::vector<std::pair<int, int>>> enumerate_compositions(int n_groups, int max_size);

// Same enumeration expressed over a table's group ids (ids taken in sorted
// order).
std::vector<groups::GroupComposition> enumerate_compositions(const groups::GroupTable& table,
                                                             int max_size);

// Closed form: sum_{k=1..max_size} C(n_groups + k - 1, k).
std::uint64_t composition_count(int n_groups, int max_size);

}  // namespace polyflam::polygen
