#pragma once

#include <string>
#include <vector>

#include "mwlat/lattice.hpp"

namespace mwlat {

/// Names of the built-in fixtures, in catalog order.
std::vector<std::string> catalog_names();

/// The order of a named fixture. Most fixtures are lattices; example35_poset
/// is the 4-element join-irreducible poset that generates example35.
Poset catalog_poset(const std::string& name);

/// Convenience: verify the fixture as a lattice.
Lattice catalog_lattice(const std::string& name);

}  // namespace mwlat
