#pragma once

#include <string>
#include <vector>

#include "fuskit/group.hpp"

namespace fuskit::catalog {

/// Build a named fixture group. Accepted names:
///   sym(n), alt(n), dihedral(n) [n = order, a power of 2 >= 4],
///   quaternion8, sl2_3, sl3_2, direct_product(a,b), s4xs4.
/// Throws PreconditionError on an unknown name.
GroupPtr build(const std::string& name);

GroupPtr symmetric(int n);
GroupPtr alternating(int n);
GroupPtr dihedral(int order);       // order = 2^k >= 4, acting on order/2 points
GroupPtr quaternion8();             // regular action on 8 points
GroupPtr sl2_3();                   // regular action on 24 points
GroupPtr sl3_2();                   // GL(3,2) on the 7 nonzero vectors of F_2^3
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

/// Names of the fixtures exercised by the test and acceptance sweeps.
std::vector<std::string> default_fixture_names();

}  // namespace fuskit::catalog
