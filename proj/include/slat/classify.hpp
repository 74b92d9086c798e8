#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slat/downsets.hpp"
#include "slat/envelope.hpp"
#include "slat/frame.hpp"

namespace slat {

// Subfit: a ≰ b implies some c with a∨c = 1 and b∨c ≠ 1.
// Throws NotBoundedDistributive unless the lattice is distributive.
Verdict is_subfit(const FiniteLattice& l);

// c is rather below a: some d has c∧d = 0 and d∨a = 1.
bool rather_below(const FiniteLattice& l, int c, int a);

// Regular: a ≰ b implies some c rather below a with c ≰ b.
Verdict is_regular_lattice(const FiniteLattice& l);

// Least base element above each frame element, when it exists everywhere.
// emb must be a meet-embedding whose image join-generates l (else NotABase).
struct LeftAdjoint {
  std::vector<int> map;  // frame element -> base element
  bool left_exact;       // preserves binary meets
};
std::optional<LeftAdjoint> left_adjoint_embedding(const MeetSemilattice& a,
                                                  const FiniteFrame& l,
                                                  const std::vector<int>& emb);

// A family of independently computed conditions that a theorem asserts are
// equivalent on every instance.
struct ConditionVector {
  std::vector<std::pair<std::string, bool>> conditions;
  std::string witness;  // detail for the first false condition, when any

  bool agree() const;
  bool value() const { return conditions.front().second; }
  std::string summary() const;
};

// The five base-is-a-frame conditions, each computed by its own code path:
// (1) the base is a distributive lattice; (2) principal downsets exhaust the
// D-ideals; (3) the normal closure is a nucleus with exactly the principal
// fixpoints; (4) the normal closure equals the induced nucleus pointwise with
// principal fixpoints; (5) the embedding into the downset frame has a left
// exact left adjoint. Throws NotBounded when the base has no top.
ConditionVector a_extremal_conditions(const MeetSemilattice& a);
Verdict is_a_extremal(const MeetSemilattice& a);  // pass iff all five agree

// The four MacNeille-completion-is-a-frame conditions: (1) the normal-ideal
// lattice is distributive; (2) normal ideals and D-ideals coincide; (3) the
// normal closure equals the D-ideal closure pointwise; (4) every relative
// annihilator is a normal ideal.
ConditionVector ma_frame_conditions(const MeetSemilattice& a);
Verdict verify_ma_frame_theorem(const MeetSemilattice& a);

// If subfit, the MacNeille conditions must all hold; otherwise not applicable.
Verdict verify_subfit_implies_ma_frame(const FiniteLattice& l);

Mask complemented_elements(const FiniteFrame& f);  // alias of complemented()

// Three formulations cross-checked: the pseudocomplement law, the
// Booleanization coinciding with the complemented elements, and the
// nontrivial DeMorgan law.
ConditionVector ed_formulations(const FiniteFrame& f);
Verdict is_extremally_disconnected(const FiniteFrame& f);

// For zero-dimensional frames: the D-ideal completion of the complemented
// elements is the Booleanization, and the five disconnectedness conditions
// agree. Throws NotZeroDimensional.
ConditionVector ed_conditions(const FiniteFrame& f);
Verdict verify_zero_dim_facts(const FiniteFrame& f);

// Aggregated classification of one instance; serialization is byte-stable
// for a fixed input and schema.
struct Report {
  int schema = 1;
  std::string instance;
  std::vector<std::pair<std::string, std::string>> predicates;
  std::vector<std::pair<std::string, std::string>> theorems;
  std::vector<std::pair<std::string, long long>> sizes;
  std::vector<std::string> excluded;

  std::string to_json() const;
  std::string to_text() const;
};
Report classification_report(const MeetSemilattice& a, const std::string& instance_id);

}  // namespace slat
