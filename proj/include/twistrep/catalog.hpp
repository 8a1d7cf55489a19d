#pragma once

#include <string>
#include <vector>

#include "twistrep/group.hpp"

namespace twistrep {
namespace catalog {

/// C_n, labels e, g, g^2, ...
GroupPtr cyclic(int n);

/// D_n of order 2n (n >= 1): r^n = s^2 = e, s r s = r^-1.
GroupPtr dihedral(int n);

/// Symmetric group S_n via permutation closure (n <= 5 at the default cap).
GroupPtr symmetric(int n);

/// Alternating group A_4.
GroupPtr alternating4();

/// Quaternion group Q_8.
GroupPtr quaternion8();

/// Klein four group (named "V4").
GroupPtr klein4();

/// Direct product with elements (a, b) in row-major order.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const std::string& name = "");

/// Every catalog group of the given order, used by `identify`.
std::vector<GroupPtr> all_of_order(int order);

/// Name of the first catalog group isomorphic to `g`, or "unknown".
std::string identify(const FiniteGroup& g);

}  // namespace catalog
}  // namespace twistrep
