#pragma once

#include <string>
#include <utility>

namespace slat {

// Result of a predicate or law check. A failing verdict carries the first
// witness in lexicographic element order, rendered as a short stable string,
// so failures are deterministic and diffable.
struct Verdict {
  bool ok = true;
  std::string detail;

  static Verdict pass() { return {}; }
  static Verdict pass(std::string note) { return {true, std::move(note)}; }
  static Verdict fail(std::string witness) { return {false, std::move(witness)}; }

  explicit operator bool() const { return ok; }
};

}  // namespace slat
