#pragma once

#include <string>

#include "slat/semilattice.hpp"

namespace slat {

// Canonical form of the order relation: the lexicographically least relation
// encoding over all relabelings compatible with element invariants. Equal
// strings iff isomorphic posets; names play no role.
std::string canonical_form(const Poset& p);

// The same poset with elements reordered into canonical position and renamed
// e0..e{n-1}; canonical_relabel(p) is a fixpoint of itself up to names.
Poset canonical_relabel(const Poset& p);

bool posets_isomorphic(const Poset& a, const Poset& b);

// Order isomorphism decides lattice isomorphism. Distributive lattices are
// compared through their join-irreducible subposets (Birkhoff), everything
// else by direct canonical-form search.
bool lattices_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace slat
