#pragma once

#include <optional>
#include <vector>

#include "twistrep/group.hpp"

namespace twistrep {

/// Searches for a group isomorphism a -> b by backtracking over images of a
/// small generating set of `a` (candidates pruned by element order). Returns
/// the element-index map, or nullopt if the groups are not isomorphic.
/// Intended for desk-scale orders (<= 96).
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace twistrep
