#pragma once

#include <vector>

#include "slat/semilattice.hpp"

namespace slat {

// A finite frame: a finite distributive lattice carrying Heyting implication
// and pseudocomplement tables.
class FiniteFrame {
 public:
  static FiniteFrame from_lattice(FiniteLattice l);  // throws NotDistributive
  static FiniteFrame from_poset(const Poset& p);

  const FiniteLattice& lattice() const { return l_; }
  const Poset& poset() const { return l_.poset(); }
  int size() const { return l_.size(); }
  const std::string& name(int i) const { return l_.name(i); }
  bool le(int a, int b) const { return l_.le(a, b); }
  int meet(int a, int b) const { return l_.meet(a, b); }
  int join(int a, int b) const { return l_.join(a, b); }
  int join_of(Mask s) const { return l_.join_of(s); }
  int bottom() const { return l_.bottom(); }
  int top() const { return l_.top(); }

  // Largest y with x ∧ y <= c.
  int heyting(int x, int c) const { return heyting_[x * size() + c]; }
  int pseudo(int x) const { return pseudo_[x]; }

 private:
  explicit FiniteFrame(FiniteLattice l);
  FiniteLattice l_;
  std::vector<signed char> heyting_;
  std::vector<signed char> pseudo_;
};

// w_c(x) = (x -> c) -> c, a nucleus for every c.
int w_nucleus(const FiniteFrame& f, int c, int x);

// Powerset of `atoms` generators, 2^atoms elements (atoms <= 6).
FiniteFrame boolean_frame(int atoms);
FiniteFrame frame_product(const FiniteFrame& a, const FiniteFrame& b);

// The frame of downsets of an arbitrary poset under union/intersection.
// Requires the downset count to stay within 64 elements.
FiniteFrame frame_of_downsets(const Poset& p);

// Complemented elements CL = {x : some y has x∧y=0, x∨y=1}.
Mask complemented(const FiniteFrame& f);

// Every element is a join of complemented elements.
Verdict is_zero_dimensional(const FiniteFrame& f);

// Extremal disconnectedness: pseudo(x) ∨ pseudo(pseudo(x)) = top for all x.
Verdict is_extremally_disconnected_law(const FiniteFrame& f);

struct Booleanization {
  FiniteFrame frame;          // fixpoints of double pseudocomplement
  std::vector<int> fixpoints; // indices into the ambient frame, ascending
  std::vector<int> nucleus;   // x -> x**, table over the ambient frame
};
Booleanization booleanization(const FiniteFrame& f);

// Frame-level nucleus/closure laws for a materialized table; witness on the
// first failing law in element order.
Verdict verify_closure_table(const FiniteFrame& f, const std::vector<int>& table);
Verdict verify_nucleus_table(const FiniteFrame& f, const std::vector<int>& table);

// s (a mask over frame elements) is closed under all meets and under
// heyting(x, t) for every frame element x and member t.
Verdict is_sublocale(const FiniteFrame& f, Mask s);

// All sublocales, ordered by inclusion; 2^|f| scan, so |f| <= 12.
std::vector<Mask> sublocales(const FiniteFrame& f);

// A sublocale is dense iff it contains the bottom.
bool is_dense_sublocale(const FiniteFrame& f, Mask s);

}  // namespace slat
