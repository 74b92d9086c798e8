#pragma once

#include <string>
#include <vector>

#include "slat/semilattice.hpp"

namespace slat {

// Prime filters: nonempty proper filters that are meet-prime in the family
// of all nonempty filters (F ∩ G ⊆ P implies F ⊆ P or G ⊆ P).
struct PrimeFilterSpace {
  std::vector<Mask> points;  // sorted by (popcount, value)
};
PrimeFilterSpace prime_filters(const MeetSemilattice& a);

// s(a) = {P : a ∈ P}, as a bitmask over the point list.
struct StoneAssignment {
  PrimeFilterSpace space;
  std::vector<Mask> image;  // indexed by element
};
StoneAssignment stone_map(const MeetSemilattice& a);

// The sublattice of the powerset of the prime-filter space generated by the
// Stone images: every element is a finite union of images. The guarantee
// flags are only claimed when the base is distributive.
struct EnvelopeLattice {
  StoneAssignment stone;
  std::vector<Mask> elements;  // point sets, sorted by (popcount, value)
  std::vector<std::string> element_names;
  FiniteLattice lattice;
  std::vector<int> embedding;  // a -> element index of s(a)
  bool embedding_injective = false;
  bool embedding_order_reflecting = false;
  bool base_distributive = false;
};
EnvelopeLattice distributive_envelope(const MeetSemilattice& a);

// For distributive a: ⋂↑a_i ⊆ ↑b iff s(b) ⊆ ⋃s(a_i), over all tuples with
// at most max_tuple antecedents. Throws PreconditionViolated otherwise.
Verdict verify_envelope_lemma(const MeetSemilattice& a, int max_tuple = 3);

// h preserves binary meets and all existing binary joins.
Verdict is_sup_morphism(const std::vector<int>& h, const MeetSemilattice& a,
                        const MeetSemilattice& b);

// The unique lattice morphism DA -> DB with Dh ∘ s_A = s_B ∘ h.
struct EnvelopeMorphism {
  EnvelopeLattice domain, codomain;
  std::vector<int> map;  // domain element -> codomain element
  bool square_commutes = false;
  bool preserves_lattice_ops = false;
};
EnvelopeMorphism envelope_extend(const std::vector<int>& h, const MeetSemilattice& a,
                                 const MeetSemilattice& b);

// For an injective sup-morphism h of a distributive a into a distributive
// lattice b: the sublattice of b generated by h[a] is isomorphic to the
// envelope of a computed through prime filters.
Verdict envelope_via_embedding(const std::vector<int>& h, const MeetSemilattice& a,
                               const FiniteLattice& b);

// Frink ideals: nonempty I with S^ul ⊆ I for every S ⊆ I, evaluated for
// every subset S (exactness over speed; carrier capped at 14).
struct FrinkFamily {
  std::vector<Mask> ideals;
  FiniteLattice lattice;
};
FrinkFamily frink_ideals(const MeetSemilattice& a);

// Ideals of a finite lattice are principal, so the ideal frame is isomorphic
// to the lattice itself; the isomorphism is returned explicitly.
struct IdealFamily {
  std::vector<Mask> ideals;
  FiniteLattice lattice;
  std::vector<int> iso;  // lattice element -> ideal index
};
IdealFamily ideal_frame(const FiniteLattice& l);

}  // namespace slat
