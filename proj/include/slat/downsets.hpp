#pragma once

#include <functional>
#include <string>
#include <vector>

#include "slat/frame.hpp"
#include "slat/semilattice.hpp"

namespace slat {

// A collection of downsets of a fixed carrier, each one a subset bitmask,
// ordered by inclusion (sorted by popcount then value).
struct DownsetFamily {
  std::vector<Mask> members;
  struct Flags {
    bool intersections = false;
    bool unions = false;
    bool heyting = false;
  } closed_under;

  int index_of(Mask m) const;
  bool contains(Mask m) const { return index_of(m) >= 0; }
  int size() const { return static_cast<int>(members.size()); }
};

inline constexpr std::size_t default_downset_cap = std::size_t{1} << 20;

// All downsets of the carrier, including the empty one.
DownsetFamily downsets(const MeetSemilattice& a, std::size_t max_count = default_downset_cap);
DownsetFamily poset_downsets(const Poset& p, std::size_t max_count = default_downset_cap);

// Heyting implication in the downset frame:
// e -> h = {x : x ∧ t ∈ h for every t ∈ e}.
Mask heyting_impl(const MeetSemilattice& a, Mask e, Mask h);

// Relative annihilator <p,q> = {x : p ∧ x <= q} = ↓p -> ↓q.
Mask annihilator(const MeetSemilattice& a, int p, int q);

// D-ideal closure of a downset: smallest downset containing e and closed
// under joins of its admissible subsets. Computed two independent ways that
// must agree; disagreement is an internal defect and throws.
Mask dideal_closure(const MeetSemilattice& a, Mask e);
Mask dideal_closure_by_saturation(const MeetSemilattice& a, Mask e);
Mask dideal_closure_by_annihilators(const MeetSemilattice& a, Mask e);

// Normal-ideal closure: intersection of every principal downset containing e
// (the whole carrier when there is none).
Mask normal_closure(const MeetSemilattice& a, Mask e);

// The nucleus x -> ⋀{(x→c)→c : c normal}, evaluated in the downset frame.
Mask normal_nucleus(const MeetSemilattice& a, Mask e);
Mask normal_nucleus(const MeetSemilattice& a, Mask e, const std::vector<Mask>& normals);

// Fixpoint families, sorted by (popcount, value).
std::vector<Mask> normal_family(const MeetSemilattice& a);  // fix of normal_closure
std::vector<Mask> dideal_family(const MeetSemilattice& a);  // fix of dideal_closure

// A self-map of the downset frame, evaluated on demand.
struct ClosureMap {
  std::string kind;
  std::function<Mask(Mask)> eval;
};
ClosureMap dideal_map(const MeetSemilattice& a);
ClosureMap normal_map(const MeetSemilattice& a);
ClosureMap nucleus_map(const MeetSemilattice& a);
ClosureMap identity_map();

// Closure laws (inflationary, monotone, idempotent) over the family; the
// nucleus check adds binary meet preservation.
Verdict verify_closure(const Poset& base, const ClosureMap& map, const DownsetFamily& family);
Verdict verify_nucleus(const Poset& base, const ClosureMap& map, const DownsetFamily& family);

// An intersection-closed family of downsets viewed as an abstract lattice,
// with the principal embedding c -> index of ↓c (or -1 when absent).
struct FamilyLattice {
  DownsetFamily family;
  FiniteLattice lattice;
  std::vector<int> embedding;
};
struct FamilyFrame {
  DownsetFamily family;
  FiniteFrame frame;
  std::vector<int> embedding;
};

FiniteLattice family_lattice(const Poset& base, const std::vector<Mask>& members);

// D-ideal completion: fix(dideal_closure) with meets = ∩ and joins = closure
// of union; always a frame, with a meet-preserving injective embedding.
FamilyFrame dideal_completion(const MeetSemilattice& a);

// MacNeille completion: the normal ideals; complete but not necessarily
// distributive. The base is join- and meet-dense in it.
FamilyLattice macneille_completion(const MeetSemilattice& a);

std::string family_to_json(const Poset& base, const std::vector<Mask>& members);
std::string family_to_dot(const Poset& base, const std::vector<Mask>& members);

}  // namespace slat
