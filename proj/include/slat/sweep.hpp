#pragma once

#include <functional>
#include <string>
#include <vector>

#include "slat/semilattice.hpp"

namespace slat {

// Per-instance outcome of a theorem verifier. Instances a theorem does not
// speak about are skipped with the reason recorded.
struct InstanceVerdict {
  std::string instance;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;
};

struct SweepResult {
  std::string theorem;
  std::vector<InstanceVerdict> verdicts;
  int instances = 0;
  int failures = 0;
  double wall_ms = 0;  // not part of the serialized lines

  bool ok() const { return failures == 0; }
  // One JSON object per instance plus a trailing summary object; byte-stable
  // across runs and worker counts.
  std::string json_lines() const;
};

using Verifier = std::function<InstanceVerdict(const MeetSemilattice&, const std::string& id)>;

std::vector<std::string> theorem_names();
bool is_registered_theorem(const std::string& name);
Verifier theorem_verifier(const std::string& name);  // throws UnknownTheorem

using Family = std::vector<std::pair<std::string, MeetSemilattice>>;

// Runs the verifier over the family, distributing instances across workers;
// results are merged in family order. workers = 0 picks a default.
SweepResult sweep(const std::string& theorem, const Family& family, int workers = 0);

// Naive reference for the D-ideal closure: scans every subset of e for
// admissibility, no pruning, recomputing joins from the raw order.
Mask oracle_delta(const MeetSemilattice& a, Mask e);  // carrier capped at 10

// Smallest instance (by size, then canonical order) whose normal closure
// breaks the nucleus meet law, or an exhaustion certificate.
struct KSearchResult {
  bool found = false;
  int size = 0;
  int index = 0;
  std::string instance_text;  // normalized poset serialization for replay
  std::string witness;        // the failing downset pair
  std::string certificate;    // set when not found
};
KSearchResult search_k_not_nucleus(int max_n);  // max_n <= 7

}  // namespace slat
