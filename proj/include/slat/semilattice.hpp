#pragma once

#include <optional>
#include <vector>

#include "slat/poset.hpp"
#include "slat/verdict.hpp"

namespace slat {

// A poset in which every pair has a greatest lower bound. The total meet
// table is built at construction; values are immutable afterwards.
class MeetSemilattice {
 public:
  static MeetSemilattice from_poset(const Poset& p);  // throws NotMeetClosed

  const Poset& poset() const { return p_; }
  int size() const { return p_.size(); }
  const std::string& name(int i) const { return p_.name(i); }
  bool le(int a, int b) const { return p_.le(a, b); }
  Mask carrier() const { return p_.carrier(); }

  int meet(int a, int b) const { return meet_[a * p_.size() + b]; }
  int meet_of(Mask s) const;  // s nonempty

  bool has_bottom() const { return bottom_ >= 0; }
  bool has_top() const { return top_ >= 0; }
  std::optional<int> bottom() const;
  std::optional<int> top() const;
  bool bounded() const { return has_bottom() && has_top(); }

  // Least upper bound of a subset when it exists; join of the empty set is
  // the bottom when there is one.
  std::optional<int> join_of(Mask s) const { return p_.bound(s, Dir::join); }
  std::optional<int> join(int a, int b) const { return join_of(bit(a) | bit(b)); }

  // Relative annihilator {x : x ∧ p ≤ q}, always a downset.
  Mask annihilator(int p, int q) const;

 private:
  explicit MeetSemilattice(Poset p);
  Poset p_;
  std::vector<signed char> meet_;
  int bottom_ = -1, top_ = -1;
};

// Distributivity in the semilattice sense: whenever meet(x,y) <= c there are
// x' >= x, y' >= y with meet(x',y') = c. Witness is the first failing triple.
Verdict is_distributive_semilattice(const MeetSemilattice& a);

// Binary meets distribute over existing binary joins.
Verdict is_weakly_distributive(const MeetSemilattice& a);

// G is admissible when its join exists and every element distributes into it.
bool is_admissible(const MeetSemilattice& a, Mask g);
std::optional<int> admissible_join(const MeetSemilattice& a, Mask g);

// All nonempty meet-closed upsets, ordered by inclusion.
struct FilterFamily {
  std::vector<Mask> filters;  // sorted by (popcount, value)
  bool is_lattice = false;
  bool is_distributive = false;  // meaningful only when is_lattice
};
FilterFamily filters(const MeetSemilattice& a);

// A meet-semilattice with a total join table.
class FiniteLattice {
 public:
  static FiniteLattice from_semilattice(const MeetSemilattice& a);  // throws NotLattice
  static FiniteLattice from_poset(const Poset& p);

  const MeetSemilattice& base() const { return ms_; }
  const Poset& poset() const { return ms_.poset(); }
  int size() const { return ms_.size(); }
  const std::string& name(int i) const { return ms_.name(i); }
  bool le(int a, int b) const { return ms_.le(a, b); }

  int meet(int a, int b) const { return ms_.meet(a, b); }
  int join(int a, int b) const { return join_[a * size() + b]; }
  int join_of(Mask s) const;  // join of empty set is the bottom
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool distributive() const { return distributive_; }

  // Join-irreducible elements: non-bottom with a unique lower cover.
  Mask join_irreducibles() const;

 private:
  explicit FiniteLattice(MeetSemilattice ms);
  MeetSemilattice ms_;
  std::vector<signed char> join_;
  int bottom_, top_;
  bool distributive_;
};

// Direct product, elements named "a.b"; distributive iff both factors are.
FiniteLattice lattice_product(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace slat
