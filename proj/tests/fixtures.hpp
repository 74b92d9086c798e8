#pragma once

#include "slat/frame.hpp"
#include "slat/semilattice.hpp"

namespace fixtures {

using namespace slat;

// Three-element chain 0 < m < 1.
inline MeetSemilattice c3() {
  return MeetSemilattice::from_poset(Poset::parse("elements: 0 m 1\ncovers: 0<m m<1\n"));
}

// The diamond: bottom, three atoms, top. A lattice, not distributive.
inline MeetSemilattice m3() {
  return MeetSemilattice::from_poset(
      Poset::parse("elements: 0 x y z 1\ncovers: 0<x 0<y 0<z x<1 y<1 z<1\n"));
}

// Bottom with two incomparable atoms and no top.
inline MeetSemilattice fence() {
  return MeetSemilattice::from_poset(Poset::parse("elements: 0 a b\ncovers: 0<a 0<b\n"));
}

// Four-element Boolean lattice.
inline MeetSemilattice b2() {
  return MeetSemilattice::from_poset(
      Poset::parse("elements: 0 p q 1\ncovers: 0<p 0<q p<1 q<1\n"));
}

// Bottom with three atoms and no top; the smallest normal-closure witness.
inline MeetSemilattice v3() {
  return MeetSemilattice::from_poset(Poset::parse("elements: 0 x y z\ncovers: 0<x 0<y 0<z\n"));
}

// The frame of upsets of {x < y, x < z}: five elements, distributive,
// not Boolean. Realized as downsets of the dual poset.
inline FiniteFrame frame_v() {
  return frame_of_downsets(Poset::parse("elements: x y z\ncovers: y<x z<x\n"));
}

inline int element(const MeetSemilattice& a, const std::string& name) {
  return a.poset().index_of(name);
}

inline Mask mask_of(const MeetSemilattice& a, std::initializer_list<const char*> names) {
  Mask m = 0;
  for (const char* n : names) m |= bit(a.poset().index_of(n));
  return m;
}

}  // namespace fixtures
