#pragma once
// Stock groups: cyclic, dihedral, dicyclic, permutation closures, direct
// products, and one representative per isomorphism class up to order 12.
// All constructions go through the validated from_table path (they are tiny),
// so a formula slip here cannot produce a non-group.

#include <string>
#include <vector>

#include "moorekit/group.hpp"

namespace moorekit {

FiniteGroup cyclic(int n);
FiniteGroup klein4();
FiniteGroup dihedral(int n);  // order 2n, n >= 1
FiniteGroup dicyclic(int m);  // order 4m, m >= 1; dicyclic(2) = Q8

// Closure of the given permutations of {0..points-1} under composition.
// Elements are the sorted permutation vectors, so the identity lands at 0.
FiniteGroup perm_group(int points, const std::vector<std::vector<Elt>>& gens,
                       std::string label);

FiniteGroup symmetric3();
FiniteGroup alternating4();
FiniteGroup alternating5();

// Lookup by conventional name: "C7", "V4", "S3", "A4", "A5", "D4" (order 8),
// "Q8", "Dic3", and 'x'-joined direct products like "C4xC2". Throws
// Error("UnknownGroup") otherwise.
FiniteGroup by_name(const std::string& name);

// One representative per isomorphism class of order <= max_order (supported up
// to 12), labeled.
std::vector<FiniteGroup> iso_classes_upto(int max_order);

}  // namespace moorekit
