#pragma once

#include <vector>

#include "mwlat/poset.hpp"

namespace mwlat {

/// All posets with exactly n elements, one per isomorphism class, sorted by
/// canonical form. Throws SizeBound for n > 8.
std::vector<Poset> enumerate_posets(int n);

/// One poset per isomorphism class, any size, whose downset count is at most
/// max_downsets. Sorted by (size, canonical form). Drives the minimal
/// counterexample search, which needs lattices H(P) below a size cap rather
/// than posets below a size cap.
std::vector<Poset> enumerate_posets_with_downset_bound(int max_downsets);

}  // namespace mwlat
